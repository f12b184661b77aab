using System;

class _02_printf_formats
{
    static void Main(string[] args) {
        int x = 42;
        double ratio = 0.5;
        char c = 'z';
        Console.WriteLine("x={0}", x);
        Console.Write("ratio {0} and {1}", ratio, c);
        Console.WriteLine();
        Console.WriteLine("{0}{1}", x, x);
        Console.WriteLine("100%");
        return;
    }
}
