public interface Shapes {
    /**
     * Returns the split.
     */
    int getSplit();
    /**
     * Returns the range.
     */
    int getRange();
    /**
     * Returns the mark.
     */
    int getMark();
    /**
     * Returns the delta.
     */
    int getDelta();
    /**
     * Returns the span.
     */
    int getSpan();
    /**
     * Returns the count.
     */
    int getCount();
}
