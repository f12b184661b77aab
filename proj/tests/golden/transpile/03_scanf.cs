using System;

class _03_scanf
{
    static void Main(string[] args) {
        int x;
        double d;
        x = int.Parse(Console.ReadLine());
        d = double.Parse(Console.ReadLine());
        Console.WriteLine("{0} {1}", x, d);
        return;
    }
}
