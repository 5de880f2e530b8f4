public interface Ledger {
    /**
     * Returns the depth.
     */
    int getDepth();
    /**
     * Returns the count.
     */
    int getCount();
    int getIndex();
    /**
     * Returns the rank.
     */
    int getRank();
    int getLimit();
    /**
     * Returns the offset.
     */
    int getOffset();
    /**
     * Returns the bound.
     */
    int getBound();
}
