public interface Blocks {
    /**
     * Returns the depth.
     */
    int getDepth();
    int getWidth();
    int getHeight();
    int getRank();
    int getBulk();
    int getSplit();
}
