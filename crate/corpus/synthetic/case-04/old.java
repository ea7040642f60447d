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
     * Not thread safe.
     */
    public boolean setLimit();

    /**
     * @return never null
     */
    public void findValue();

    /**
     * @deprecated use the builder instead
     */
    public String findLimit();

    /**
     * @deprecated use the builder instead
     */
    public long getOwner();
}
