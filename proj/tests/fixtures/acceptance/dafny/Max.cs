class P {
    static int Max(int a, int b) {
        if (a > b) {
            return a;
        } else {
            return b;
        }
    }
}
