using System;

class _07_defines_globals
{
    const int LIMIT = 10;
    const double RATE = 2.5;

    static int counter = 0;

    static void bump() {
        counter = counter + 1;
    }

    static void Main(string[] args) {
        while (counter < LIMIT) {
            bump();
        }
        Console.WriteLine("{0} {1}", counter, RATE);
        return;
    }
}
