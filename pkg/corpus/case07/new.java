public interface Blocks {
    int getWidth();
    /**
     * Returns the split.
     */
    int getSplit();
    /**
     * Returns the height.
     */
    int getHeight();
    /**
     * Returns the bound.
     */
    int getBound();
    int getOrder();
    int getRatio();
}
