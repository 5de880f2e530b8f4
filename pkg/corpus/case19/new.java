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
     * Returns the slot.
     */
    int getSlot();
    /**
     * Returns the share.
     */
    int getShare();
    /**
     * Returns the bound.
     */
    int getBound();
    /**
     * Returns the index.
     */
    int getIndex();
}
