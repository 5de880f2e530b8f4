public class Cursor {
    int getPhase() {
        return phase;
    }
    int getWeight() {
        return weight;
    }
    /**
     * Returns the span.
     */
    int getSpan() {
        return span;
    }
    /**
     * Returns the bound.
     */
    int getBound() {
        return bound;
    }
    /**
     * Returns the limit.
     */
    int getLimit() {
        return limit;
    }
}
