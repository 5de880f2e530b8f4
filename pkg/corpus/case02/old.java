public class Blocks {
    /**
     * Returns the level.
     */
    int getLevel() {
        return level;
    }
    /**
     * Returns the delta.
     */
    int getDelta() {
        return delta;
    }
    int getOrder() {
        return order;
    }
    int getSplit() {
        return split;
    }
}
