#include <stdio.h>

void array_reverse(int a[], int n) {
    int i = 0;
    int j = n - 1;
    while (i < j) {
        int t = a[i];
        a[i] = a[j];
        a[j] = a[i];
        i++;
        j--;
    }
}

int main(void) {
    int a[5] = {1, 2, 3, 4, 5};
    array_reverse(a, 5);
    for (int k = 0; k < 5; k++) {
        printf("%d ", a[k]);
    }
    printf("\n");
    return 0;
}
