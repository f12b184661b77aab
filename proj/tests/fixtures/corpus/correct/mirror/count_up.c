#include <stdio.h>

void count_up(int n) {
    for (int i = 1; i <= n; i++) {
        printf("%d\n", i);
    }
}

int main(void) {
    count_up(5);
    return 0;
}
