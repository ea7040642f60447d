public interface Blah {
    int getCount();
    /**
     * @deprecated
     */
    void reset();
    /**
     * @deprecated
     */
    Range getRange();
}
