public interface Shapes {
    /**
     * Returns the split.
     */
    int getSplit();
    /**
     * Returns the mark.
     */
    int getMark();
    /**
     * Returns the span.
     */
    int getSpan();
    /**
     * Returns the delta.
     */
    int getDelta();
    /**
     * Returns the count.
     */
    int getCount();
}
