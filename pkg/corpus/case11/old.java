public class Cursor {
    int getCount() {
        return count;
    }
    int getLimit() {
        return limit;
    }
    /**
     * Returns the bulk.
     */
    int getBulk() {
        return bulk;
    }
    /**
     * Returns the index.
     */
    int getIndex() {
        return index;
    }
}
