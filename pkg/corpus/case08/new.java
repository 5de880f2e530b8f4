public class Ledger {
    /**
     * Returns the shift.
     */
    int getShift() {
        return shift;
    }
    int getPhase() {
        return phase;
    }
    /**
     * Returns the split.
     */
    int getSplit() {
        return split;
    }
    /**
     * Returns the order.
     */
    int getOrder() {
        return order;
    }
}
