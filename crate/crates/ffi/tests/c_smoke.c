#include <stdio.h>
#include <string.h>
#include "dgkoszul.h"

int main(void) {
    DgkStructure *g = NULL;
    if (dgk_fixture_load("sl2", &g) != DGK_STATUS_OK) return 10;
    bool passed = false;
    if (dgk_check_axioms(g, &passed, NULL) != DGK_STATUS_OK || !passed) return 11;

    DgkStructure *p = NULL;
    if (dgk_ce(g, &p) != DGK_STATUS_OK) return 12;
    size_t dims[4];
    if (dgk_betti(p, 3, 0, 3, dims) != DGK_STATUS_OK) return 13;
    if (dims[0] != 1 || dims[1] != 0 || dims[2] != 0 || dims[3] != 1) return 14;

    DgkStructure *missing = NULL;
    if (dgk_fixture_load("no-such-fixture", &missing) != DGK_STATUS_UNKNOWN_FIXTURE) return 15;
    char *msg = dgk_last_error_message();
    if (msg == NULL || strstr(msg, "no-such-fixture") == NULL) return 16;
    dgk_string_free(msg);

    const char *argv[] = {"mc-check", "--input", "g2dim", "--element", "x"};
    char *out = NULL;
    int code = -1;
    if (dgk_run(5, argv, &out, &code) != DGK_STATUS_OK || code != 0) return 17;
    dgk_string_free(out);

    dgk_structure_free(p);
    dgk_structure_free(g);
    printf("ok\n");
    return 0;
}
