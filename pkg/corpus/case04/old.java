public interface Shapes {
    /**
     * Returns the depth.
     */
    int getDepth();
    int getCount();
    /**
     * Returns the rank.
     */
    int getRank();
    int getSlot();
    /**
     * Returns the scale.
     */
    int getScale();
    int getBulk();
}
