public interface Ledger {
    /**
     * Returns the limit.
     */
    int getLimit();
    /**
     * Returns the span.
     */
    int getSpan();
    /**
     * Returns the depth.
     */
    int getDepth();
    /**
     * Returns the offset.
     */
    int getOffset();
}
