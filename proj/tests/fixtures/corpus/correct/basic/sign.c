#include <stdio.h>

int sign(int x) {
    if (x > 0) {
        return 1;
    }
    if (x < 0) {
        return -1;
    }
    return 0;
}

int main(void) {
    printf("%d %d %d\n", sign(5), sign(-3), sign(0));
    return 0;
}
