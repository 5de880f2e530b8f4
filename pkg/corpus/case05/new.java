public interface Cursor {
    /**
     * Returns the height.
     */
    int getHeight();
    int getDelta();
    int getBulk();
    /**
     * Returns the ratio.
     */
    int getRatio();
}
