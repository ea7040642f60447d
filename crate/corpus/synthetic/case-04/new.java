package org.example;

public interface OwnerView {

    /**
     * @return never null
     */
    public long updateState();

    /**
     * @since 2.0
     */
    public boolean loadLimit();

    /**
     * @return never null
     */
    public void findValue();

    /**
     * @deprecated use the builder instead
     */
    public String findLimit();
}
