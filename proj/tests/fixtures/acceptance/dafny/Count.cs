class P {
    static int Count(int n) {
        int i = 0;
        while (i < n) {
            i = i + 1;
        }
        return i;
    }
}
