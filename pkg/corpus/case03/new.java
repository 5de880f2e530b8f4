public interface Blocks {
    int getDepth();
    int getWidth();
    int getRank();
    int getBulk();
    /**
     * Returns the split.
     */
    int getSplit();
}
