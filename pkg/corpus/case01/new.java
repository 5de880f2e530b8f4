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
    int getPhase();
    /**
     * Returns the level.
     */
    int getLevel();
}
