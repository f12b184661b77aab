/*@ requires n > 0;
    ensures \result >= 1; */
int steps(int n) {
    int s = 0;
    do {
        s++;
        n--;
    } while (n > 0);
    return s > 0 ? s : 1;
}
