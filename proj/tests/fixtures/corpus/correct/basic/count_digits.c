#include <stdio.h>

int count_digits(int n) {
    int count = 0;
    if (n == 0) {
        return 1;
    }
    while (n != 0) {
        n = n / 10;
        count++;
    }
    return count;
}

int main(void) {
    printf("%d\n", count_digits(12345));
    return 0;
}
