#include <stdio.h>

int bit_count(unsigned int x) {
    int count = 0;
    while (x != 0) {
        count += x & 3;
        x = x >> 1;
    }
    return count;
}

int main(void) {
    printf("%d\n", bit_count(255));
    return 0;
}
