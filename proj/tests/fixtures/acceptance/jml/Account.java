public class Account {
    int balance;
    boolean open;
    String owner;

    void rename(String name) {
        owner = name;
    }
}
