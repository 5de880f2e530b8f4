public interface Roster {
    /**
     * Returns the level.
     */
    int getLevel();
    /**
     * Returns the scale.
     */
    int getScale();
    /**
     * Returns the span.
     */
    int getSpan();
    /**
     * Returns the width.
     */
    int getWidth();
    /**
     * Returns the range.
     */
    int getRange();
}
