public interface Blocks {
    int getCount();
    /**
     * Returns the split.
     */
    int split();
    /**
     * Returns the bulk.
     */
    int bulk();
    int getRange();
}
