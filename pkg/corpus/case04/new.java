public interface Shapes {
    /**
     * Returns the level.
     */
    int getLevel();
    int getCount();
    /**
     * Returns the rank.
     */
    int getRank();
    int getBulk();
    /**
     * Returns the scale.
     */
    int getScale();
    int getSlot();
}
