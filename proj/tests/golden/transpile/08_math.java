import java.util.*;

public class _08_math {
    static Scanner scanner = new Scanner(System.in);

    public static double hyp(double a, double b) {
        return Math.sqrt(a * a + b * b);
    }

    public static void main(String[] args) {
        System.out.println(hyp(3.0, 4.0));
        System.out.println(Math.abs(-5));
        System.out.println(Math.pow(2.0, 8.0));
        return;
    }
}
