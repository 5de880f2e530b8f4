public interface Lattice {
    /**
     * Returns the order.
     */
    int getOrder();
    int getBound();
    /**
     * Returns the ratio.
     */
    int getRatio();
    /**
     * Returns the mark.
     */
    int getMark();
    int getOffset();
    /**
     * Returns the weight.
     */
    int getWeight();
}
