public interface Lattice {
    /**
     * Returns the scale.
     */
    int getScale();
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
    /**
     * Returns the rank.
     */
    int getRank();
    int getBound();
}
