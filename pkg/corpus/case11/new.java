public class Cursor {
    int getLimit() {
        return limit;
    }
    /**
     * Returns the bulk.
     */
    int getBulk() {
        return bulk;
    }
}
