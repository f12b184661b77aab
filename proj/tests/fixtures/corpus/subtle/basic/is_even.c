#include <stdio.h>

int is_even(int n) {
    if (n % 4 == 0) {
        return 1;
    } else {
        return 0;
    }
}

int main(void) {
    printf("%d %d\n", is_even(4), is_even(7));
    return 0;
}
