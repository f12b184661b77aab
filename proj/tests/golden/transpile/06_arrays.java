import java.util.*;

public class _06_arrays {
    static Scanner scanner = new Scanner(System.in);

    public static int sum(int[] a, int n) {
        int s = 0;
        for (int i = 0; i < n; i++) {
            s += a[i];
        }
        return s;
    }

    public static void main(String[] args) {
        int[] data = {1, 2, 3, 4};
        int[] squares = new int[10];
        for (int i = 0; i < 10; i++) {
            squares[i] = i * i;
        }
        System.out.println(sum(data, 4) + " " + squares[9]);
        return;
    }
}
