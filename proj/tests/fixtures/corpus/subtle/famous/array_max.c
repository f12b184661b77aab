#include <stdio.h>

int array_max(int a[], int n) {
    int best = a[0];
    for (int i = 1; i < n - 1; i++) {
        if (a[i] > best) {
            best = a[i];
        }
    }
    return best;
}

int main(void) {
    int a[6] = {3, 9, 2, 7, 9, 1};
    printf("max = %d\n", array_max(a, 6));
    return 0;
}
