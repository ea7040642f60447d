public interface Blah {
    /**
     * @since 2.0
     */
    int getCount();
    /**
     * @since 2.0
     */
    Range getRange();
}
