public class Blocks {
    /**
     * Returns the delta.
     */
    int getDelta() {
        return delta;
    }
    int getOrder() {
        return order;
    }
}
