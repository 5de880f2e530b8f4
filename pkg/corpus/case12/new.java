public interface Lattice {
    /**
     * Returns the mark.
     */
    int getMark();
    /**
     * Returns the weight.
     */
    int getWeight();
    int getPhase();
    /**
     * Returns the split.
     */
    int getSplit();
}
