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
     * Returns the split.
     */
    int getSplit() {
        return split;
    }
}
