using System;

class _01_hello
{
    static void Main(string[] args) {
        Console.WriteLine("hi");
        return;
    }
}
