"""Recompute the embedding certificates behind the Betti-9 case analysis:
the pinned-face embeddings of the distinguished cycles of F13 and F14, plus
the classical ones (K33 and Petersen in the projective plane, Heawood in the
torus with hexagonal faces). Certificates are written as JSON to stdout.
"""

import json
import sys

from regma.catalog import NAMED_CYCLE_MODES, catalog, named_cycle
from regma.surface import embeds_in, embeds_with_face, verify_certificate


def main() -> int:
    out = {}
    for name, chi, orientable in (("k33", 1, False), ("petersen", 1, False),
                                  ("heawood", 0, True)):
        cert = embeds_in(catalog(name), chi, orientable)
        assert cert is not None and verify_certificate(catalog(name), cert)
        out[name] = json.loads(cert.to_json())
        print(f"{name}: chi = {cert.chi}, faces "
              f"{sorted(len(f) for f in cert.faces)}", file=sys.stderr)
    for cname in sorted(NAMED_CYCLE_MODES):
        g, c = named_cycle(cname)
        chi, orientable = NAMED_CYCLE_MODES[cname]
        cert = embeds_with_face(g, chi, orientable, c)
        assert cert is not None and verify_certificate(g, cert, c)
        out[cname] = json.loads(cert.to_json())
        print(f"{cname}: pinned cycle of length {len(c)} bounds a face, "
              f"chi = {cert.chi}", file=sys.stderr)
    print(json.dumps(out, sort_keys=True, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
