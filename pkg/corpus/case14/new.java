public class Shapes {
    int getPhase() {
        return phase;
    }
    int getOrder() {
        return order;
    }
    /**
     * Returns the ratio.
     */
    int getRatio() {
        return ratio;
    }
}
