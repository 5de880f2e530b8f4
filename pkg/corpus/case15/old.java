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
     * Returns the width.
     */
    int getWidth();
    int getIndex();
    /**
     * Returns the range.
     */
    int getRange();
}
