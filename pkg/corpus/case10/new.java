public interface Lattice {
    /**
     * Returns the range.
     */
    int getRange();
    /**
     * Returns the index.
     */
    int getIndex();
    /**
     * Returns the bulk.
     */
    int getBulk();
    int getBound();
}
