#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "nevwb.h"

static int failures = 0;

#define EXPECT(cond)                                                 \
    do {                                                             \
        if (!(cond)) {                                               \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                              \
        }                                                            \
    } while (0)

static void polynomials(void) {
    nevwb_poly* p = NULL;
    EXPECT(nevwb_poly_parse("x0^2 + x1*x2", 3, NULL, &p) == NEVWB_OK);
    char* s = NULL;
    EXPECT(nevwb_poly_to_string(p, &s) == NEVWB_OK);
    EXPECT(s && strstr(s, "x1*x2") != NULL);
    nevwb_string_free(s);
    char* doc = NULL;
    EXPECT(nevwb_poly_to_json(p, &doc) == NEVWB_OK);
    nevwb_poly* q = NULL;
    EXPECT(nevwb_poly_from_json(doc, &q) == NEVWB_OK);
    nevwb_string_free(doc);
    nevwb_poly_free(q);
    nevwb_poly_free(p);

    nevwb_poly* bad = NULL;
    EXPECT(nevwb_poly_parse("x0 +* x1", 3, NULL, &bad) == NEVWB_E_PARSE);
    EXPECT(bad == NULL);
    EXPECT(strlen(nevwb_last_error()) > 0);
    EXPECT(nevwb_poly_parse(NULL, 3, NULL, &bad) == NEVWB_E_NULL_ARGUMENT);
}

static void functionals(void) {
    nevwb_mero* f = NULL;
    EXPECT(nevwb_mero_from_json("{\"unit\": \"2*z\"}", &f) == NEVWB_OK);
    double T = 0;
    EXPECT(nevwb_nev_value(f, "T", NULL, 10.0, &T) == NEVWB_OK);
    EXPECT(fabs(T - 20.0 / M_PI) < 1e-9);
    EXPECT(nevwb_nev_value(f, "Q", NULL, 10.0, &T) == NEVWB_E_INVALID_INPUT);
    EXPECT(nevwb_nev_value(f, "T", NULL, -1.0, &T) == NEVWB_E_NUMERIC_DOMAIN);
    nevwb_mero_free(f);

    char* out = NULL;
    EXPECT(nevwb_nev_grid("[\"1\", \"z\", \"z + 1\"]", "T", NULL, 10, 100, 4, &out) == NEVWB_OK);
    EXPECT(out && strstr(out, "\"rows\"") != NULL);
    nevwb_string_free(out);
}

static void exceptional_set(void) {
    nevwb_poly* G = NULL;
    EXPECT(nevwb_poly_parse("x0^2 + x1^2 + x2^2", 3, NULL, &G) == NEVWB_OK);
    char* out = NULL;
    EXPECT(nevwb_exceptional_set(G, 2, "[\"1\", \"z\", \"i\"]", &out) == NEVWB_OK);
    EXPECT(out && strstr(out, "\"membership\"") != NULL);
    nevwb_string_free(out);
    nevwb_poly_free(G);

    EXPECT(nevwb_constants(2, 1, "1/2", NULL, NULL, &out) == NEVWB_OK);
    EXPECT(out && strstr(out, "\"m\": 29") != NULL);
    nevwb_string_free(out);
    EXPECT(nevwb_constants(1, 1, "1/2", NULL, NULL, &out) == NEVWB_E_INVALID_INPUT);
}

static void morphisms(void) {
    nevwb_poly *a = NULL, *b = NULL, *c = NULL, *z = NULL;
    nevwb_poly_parse("x0", 3, NULL, &a);
    nevwb_poly_parse("x1", 3, NULL, &b);
    nevwb_poly_parse("x0^2 + x1^2 + x2^2", 3, NULL, &c);
    nevwb_poly_parse("x2", 3, NULL, &z);
    nevwb_morphism* m = NULL;
    EXPECT(nevwb_morphism_make(a, b, c, 1, &m) == NEVWB_OK);
    char* out = NULL;
    EXPECT(nevwb_morphism_op(m, "jacobian", NULL, &out) == NEVWB_OK);
    EXPECT(out && strstr(out, "\"determinant\": \"2*x2\"") != NULL);
    nevwb_string_free(out);
    EXPECT(nevwb_morphism_op(m, "pushforward", z, &out) == NEVWB_OK);
    EXPECT(out && strstr(out, "\"vanishing_order\": 2") != NULL);
    nevwb_string_free(out);
    EXPECT(nevwb_morphism_op(m, "pushforward", NULL, &out) == NEVWB_E_INVALID_INPUT);
    nevwb_morphism_free(m);

    const nevwb_poly* lines[3] = {a, b, z};
    EXPECT(nevwb_general_position(lines, 3, &out) == NEVWB_OK);
    EXPECT(out && strstr(out, "\"in_general_position\": true") != NULL);
    nevwb_string_free(out);
    EXPECT(nevwb_transversality(a, b, &out) == NEVWB_OK);
    nevwb_string_free(out);

    nevwb_morphism* bad = NULL;
    EXPECT(nevwb_morphism_make(a, b, b, 1, &bad) == NEVWB_E_INVALID_INPUT);
    nevwb_poly_free(a);
    nevwb_poly_free(b);
    nevwb_poly_free(c);
    nevwb_poly_free(z);
}

static void scenarios(void) {
    const char* doc =
        "{\"target\": \"thm1.5-ii\", \"G\": \"x0^2 + x1^2 + x2^2\", \"curve\": [\"1\", \"z\", \"z + 1\"],"
        " \"grid\": {\"r_min\": 10, \"r_max\": 1000, \"count\": 8}}";
    nevwb_scenario* s = NULL;
    EXPECT(nevwb_scenario_parse(doc, &s) == NEVWB_OK);
    EXPECT(nevwb_scenario_override(s, "1/5", 0, 0, 6) == NEVWB_OK);
    EXPECT(nevwb_scenario_override(s, "-1", 0, 0, 0) == NEVWB_E_INVALID_INPUT);
    nevwb_report* r = NULL;
    EXPECT(nevwb_run_scenario(s, &r) == NEVWB_OK);
    EXPECT(nevwb_report_verdict(r) == NEVWB_HOLDS_ON_GRID);
    EXPECT(!nevwb_report_failed(r));
    char* csv = NULL;
    EXPECT(nevwb_report_csv(r, &csv) == NEVWB_OK);
    int lines = 0;
    for (const char* p = csv; p && *p; ++p) lines += *p == '\n';
    EXPECT(lines == 7);
    nevwb_string_free(csv);
    nevwb_report_free(r);
    nevwb_scenario_free(s);

    EXPECT(nevwb_scenario_parse("{\"target\": 3}", &s) == NEVWB_E_PARSE);
    EXPECT(nevwb_scenario_load("/nonexistent/x.json", &s) == NEVWB_E_IO);
}

int main(void) {
    polynomials();
    functionals();
    exceptional_set();
    morphisms();
    scenarios();
    if (failures) fprintf(stderr, "%d failures\n", failures);
    else printf("c api: all checks passed\n");
    return failures ? 1 : 0;
}
