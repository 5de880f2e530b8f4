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
