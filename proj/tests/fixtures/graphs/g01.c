/*@ ensures \result == x + 1; */
int inc(int x) { return x + 1; }
