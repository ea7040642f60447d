package org.example;

public interface OwnerView {

    public List<Item> removeLimit();

    public int loadName();

    /**
     * @return never null
     */
    public String loadName();

    /**
     * @since 2.0
     */
    public String saveName();

    /**
     * @return never null
     */
    public void saveItems();
}
