public interface Blocks {
    /**
     * Returns the width.
     */
    int getWidth();
    /**
     * Returns the height.
     */
    int getHeight();
    /**
     * Returns the bound.
     */
    int getBound();
    int getOrder();
    /**
     * Returns the slot.
     */
    int getSlot();
}
