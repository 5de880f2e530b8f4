public interface Shapes {
    /**
     * Returns the range.
     */
    int getRange();
    /**
     * Returns the shift.
     */
    int getShift();
    /**
     * Returns the share.
     */
    int getShare();
    /**
     * Returns the index.
     */
    int getIndex();
}
