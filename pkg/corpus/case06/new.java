public class Blocks {
    int getLimit() {
        return limit;
    }
    /**
     * Returns the split.
     */
    int getSplit() {
        return split;
    }
    /**
     * Returns the shift.
     */
    int getShift() {
        return shift;
    }
    int getOrder() {
        return order;
    }
}
