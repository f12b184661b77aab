#include <stdio.h>

void suffix_sum(int a[], int out[], int n) {
    int s = 0;
    for (int i = n - 1; i > 0; i--) {
        s += a[i];
        out[i] = s;
    }
}

int main(void) {
    int a[5] = {1, 2, 3, 4, 5};
    int out[5];
    suffix_sum(a, out, 5);
    for (int i = 0; i < 5; i++) {
        printf("%d ", out[i]);
    }
    printf("\n");
    return 0;
}
