public interface Ledger {
    /**
     * Returns the span.
     */
    int getSpan();
    /**
     * Returns the offset.
     */
    int getOffset();
    /**
     * Returns the depth.
     */
    int getDepth();
}
