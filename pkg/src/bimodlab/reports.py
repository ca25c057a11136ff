"""Deterministic report documents and certificate serialization.

Reports are JSON with sorted keys and exact scalars rendered as `p/q`
strings, so a fixed workspace, command and seed produce identical bytes on
every platform.  Each numeric result carries a provenance note naming the
operation that produced it.
"""

import json

from .errors import BimodlabError
from .fields import QQ
from .ksplit import KSplitCertificate, split_bimodule_from_slices
from .linalg import Matrix
from .modules import BimoduleMap, RightModule


class Report:
    def __init__(self, command, config, results, provenance):
        self.command = list(command)
        self.config = dict(config)
        self.results = results
        self.provenance = list(provenance)

    def to_dict(self):
        return {
            "command": self.command,
            "configuration": self.config,
            "results": self.results,
            "provenance": self.provenance,
        }

    def render(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def parse(cls, text):
        doc = json.loads(text)
        return cls(doc["command"], doc["configuration"], doc["results"],
                   doc["provenance"])

    def __eq__(self, other):
        return isinstance(other, Report) and self.to_dict() == other.to_dict()


def format_matrix(field, matrix):
    return [[field.format(x) for x in row] for row in matrix.rows]


def parse_matrix(field, rows, ncols=None):
    return Matrix(field, [[field.parse(x) for x in row] for row in rows], ncols)


def serialize_certificate(cert):
    """A JSON-able document from which the certificate can be rebuilt."""
    q = cert.bimodule
    field = q.field
    doc = {
        "verdict": cert.verdict,
        "bimodule_dim": q.dim,
        "field": "Q" if field == QQ else "Fp:%d" % field.p,
    }
    if cert.verdict == "success":
        doc["slices"] = [{
            "dim": k.dim,
            "action": [format_matrix(field, m) for m in k.action],
        } for k in cert.slices]
        doc["slice_dims"] = [k.dim for k in cert.slices]
        doc["hat_dim"] = cert.hat.dim
        doc["beta"] = format_matrix(field, cert.beta)
        doc["gamma"] = format_matrix(field, cert.gamma.matrix)
        doc["dim_identity"] = "dim Qhat = %d = dim Q" % q.dim
    else:
        doc["failure"] = cert.kind
        if cert.kind == "DimensionMismatch":
            doc["witness"] = {"hat_dim": cert.witness[0], "q_dim": cert.witness[1]}
        elif cert.kind == "NotLeftProjective":
            doc["witness"] = {"gap": cert.witness}
        else:
            doc["witness"] = None
    return doc


def certificate_from_document(doc, bimodule):
    """Rebuild a KSplitCertificate for the given bimodule from a document."""
    field = bimodule.field
    if doc["verdict"] != "success":
        kind = doc["failure"]
        witness = None
        if kind == "DimensionMismatch":
            witness = (doc["witness"]["hat_dim"], doc["witness"]["q_dim"])
        elif kind == "NotLeftProjective":
            witness = doc["witness"]["gap"]
        return KSplitCertificate(bimodule, "failure", kind=kind, witness=witness)
    slices = []
    for i, item in enumerate(doc["slices"]):
        action = [parse_matrix(field, rows, item["dim"]) for rows in item["action"]]
        slices.append(RightModule(bimodule.right_algebra, action, validate=True,
                                  label="K%d" % (i + 1)))
    hat = split_bimodule_from_slices(bimodule.left_algebra, slices)
    if hat.dim != doc["hat_dim"]:
        raise BimodlabError("stored certificate is inconsistent: hat dimension")
    beta = parse_matrix(field, doc["beta"],
                        None if doc["beta"] else 0)
    gamma = BimoduleMap(hat, bimodule,
                        parse_matrix(field, doc["gamma"], bimodule.dim),
                        validate=False)
    return KSplitCertificate(bimodule, "success", slices=slices, hat=hat,
                             beta=beta, gamma=gamma)


def explain(cert):
    """Render a certificate as result content for a report."""
    doc = serialize_certificate(cert)
    if cert.verdict == "success":
        summary = ("split over the base field: dim Qhat = dim Q = %d, "
                   "slice dimensions %r" % (cert.bimodule.dim, doc["slice_dims"]))
    else:
        summary = "not split over the base field: %s" % cert.kind
    doc["summary"] = summary
    return doc
