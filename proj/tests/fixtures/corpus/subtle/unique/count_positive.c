#include <stdio.h>

int count_positive(int a[], int n) {
    int c = 0;
    for (int i = 0; i < n; i++) {
        if (a[i] >= 0) {
            c++;
        }
    }
    return c;
}

int main(void) {
    int a[7] = {-3, 0, 4, 9, -1, 2, 0};
    printf("%d\n", count_positive(a, 7));
    return 0;
}
