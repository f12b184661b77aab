#include <stdio.h>

int max_index(int a[], int n) {
    int best = 0;
    for (int i = 1; i < n; i++) {
        if (a[i] > a[best]) {
            best = i;
        }
    }
    return best;
}

int main(void) {
    int a[5] = {4, 2, 9, 1, 5};
    printf("%d\n", max_index(a, 5));
    return 0;
}
