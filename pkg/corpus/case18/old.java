public class Lattice {
    /**
     * Returns the depth.
     */
    int getDepth() {
        return depth;
    }
    /**
     * Returns the offset.
     */
    int getOffset() {
        return offset;
    }
    int getSpan() {
        return span;
    }
    int getSplit() {
        return split;
    }
    int getWeight() {
        return weight;
    }
    /**
     * Returns the mark.
     */
    int getMark() {
        return mark;
    }
    /**
     * Returns the shift.
     */
    int getShift() {
        return shift;
    }
    /**
     * Returns the slot.
     */
    int getSlot() {
        return slot;
    }
    /**
     * Returns the limit.
     */
    int getLimit() {
        return limit;
    }
}
