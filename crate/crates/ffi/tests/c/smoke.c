#include <stdio.h>
#include <string.h>

#include "qkhilbert.h"

static int expect(int ok, const char *what) {
    if (!ok) {
        const char *err = qk_last_error();
        fprintf(stderr, "failed: %s (%s)\n", what, err ? err : "no error");
    }
    return ok ? 0 : 1;
}

int main(void) {
    int failures = 0;
    QkHilbert *g2 = NULL;
    failures += expect(qk_hilbert_new("G2", &g2) == QK_STATUS_OK, "G2 handle");

    char *s = NULL;
    failures += expect(qk_hilbert_value(g2, 1, &s) == QK_STATUS_OK && strcmp(s, "14") == 0, "P(1) = 14");
    qk_string_free(s);
    failures += expect(qk_hilbert_volume(g2, &s) == QK_STATUS_OK && strcmp(s, "9") == 0, "volume 9");
    qk_string_free(s);
    qk_hilbert_free(g2);

    QkHilbert *bad = NULL;
    failures += expect(qk_hilbert_new("D2", &bad) == QK_STATUS_INADMISSIBLE_ALGEBRA, "D2 rejected");
    failures += expect(bad == NULL && qk_last_error() != NULL, "error message set");

    QkTower *t = NULL;
    bool terminated = false;
    size_t degree = 0, total = 0;
    failures += expect(qk_tower_new(1, 1, 0, &t) == QK_STATUS_OK, "tower");
    failures += expect(qk_tower_termination(t, &terminated, &degree, &total) == QK_STATUS_OK, "termination");
    failures += expect(terminated && degree == 1 && total == 10, "degree 1, total 10");
    qk_tower_free(t);

    printf("%s %d\n", qk_version(), failures);
    return failures;
}
