public interface Blocks {
    /**
     * Returns the shift.
     */
    int getShift();
    int getWeight();
    /**
     * Returns the split.
     */
    int getSplit();
    /**
     * Returns the scale.
     */
    int getScale();
    /**
     * Returns the level.
     */
    int getLevel();
}
