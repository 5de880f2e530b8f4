public class Shapes {
    int getPhase() {
        return phase;
    }
    int getOrder() {
        return order;
    }
    int getBulk() {
        return bulk;
    }
    int getShift() {
        return shift;
    }
    /**
     * Returns the ratio.
     */
    int getRatio() {
        return ratio;
    }
}
