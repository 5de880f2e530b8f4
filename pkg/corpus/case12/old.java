public interface Lattice {
    /**
     * Returns the mark.
     */
    int getMark();
    /**
     * Returns the scale.
     */
    int getScale();
    /**
     * Returns the weight.
     */
    int getWeight();
    int getDelta();
    /**
     * Returns the split.
     */
    int getSplit();
}
