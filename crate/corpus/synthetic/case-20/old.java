package org.example;

public interface RangeView {

    public boolean saveRange();

    /**
     * @return never null
     */
    public boolean countValue();

    public boolean updateValue();

    public long saveName();

    /**
     * @return never null
     */
    public long getCount();

    public void saveOwner();

    /**
     * @deprecated use the builder instead
     */
    public int saveRange();

    public String removeCount();

    public void updateRange();

    public long setLimit();
}
