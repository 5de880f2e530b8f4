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
     * Returns the order.
     */
    int getOrder() {
        return order;
    }
    int getSplit() {
        return split;
    }
}
