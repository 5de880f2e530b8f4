public interface Lattice {
    /**
     * Returns the order.
     */
    int getOrder();
    int getRange();
    int getOffset();
    /**
     * Returns the mark.
     */
    int getMark();
    /**
     * Returns the ratio.
     */
    int getRatio();
}
