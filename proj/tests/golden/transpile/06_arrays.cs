using System;

class _06_arrays
{
    static int sum(int[] a, int n) {
        int s = 0;
        for (int i = 0; i < n; i++) {
            s += a[i];
        }
        return s;
    }

    static void Main(string[] args) {
        int[] data = {1, 2, 3, 4};
        int[] squares = new int[10];
        for (int i = 0; i < 10; i++) {
            squares[i] = i * i;
        }
        Console.WriteLine("{0} {1}", sum(data, 4), squares[9]);
        return;
    }
}
