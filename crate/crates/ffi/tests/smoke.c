#include <stdio.h>
#include <string.h>
#include "kirchhoff.h"

static const char *K4 =
    "vertex 1\nvertex 2\nvertex 3\nvertex 4\n"
    "edge 1 1 2\nedge 2 1 3\nedge 3 1 4\nedge 4 2 3\nedge 5 2 4\nedge 6 3 4\n";

int main(void) {
    KirchhoffGraph *g = NULL;
    if (kirchhoff_graph_parse(K4, &g) != KIRCHHOFF_STATUS_OK) return 1;

    int64_t coeffs[16];
    size_t len = 0;
    if (kirchhoff_poincare(g, coeffs, 16, &len) != KIRCHHOFF_STATUS_OK) return 2;
    for (size_t i = 0; i < len; i++) printf(i ? " %lld" : "%lld", (long long)coeffs[i]);
    printf("\n");

    uint64_t k = 0;
    if (kirchhoff_complexity(g, &k) != KIRCHHOFF_STATUS_OK) return 3;
    printf("complexity %llu\n", (unsigned long long)k);
    kirchhoff_graph_free(g);

    KirchhoffGraph *bad = NULL;
    if (kirchhoff_graph_parse("vertex 1\nedge 1 1 1\nedge 1 1 1\n", &bad) != KIRCHHOFF_STATUS_INPUT_ERROR) return 4;
    if (strstr(kirchhoff_last_error(), "duplicate") == NULL) return 5;
    printf("duplicate\n");
    return 0;
}
