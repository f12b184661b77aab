#include <stdio.h>

void count_down(int n) {
    for (int i = n; i >= 1; i--) {
        printf("%d\n", i);
    }
}

int main(void) {
    count_down(5);
    return 0;
}
