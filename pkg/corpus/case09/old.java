public interface Ledger {
    /**
     * Returns the depth.
     */
    int getDepth();
    int getWidth();
    /**
     * Returns the rank.
     */
    int getRank();
    int getIndex();
    /**
     * Returns the offset.
     */
    int getOffset();
    /**
     * Returns the bound.
     */
    int getBound();
}
