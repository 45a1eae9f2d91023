#!/usr/bin/env python3
"""Regenerate the fixture PDFs (needs reportlab). Output is deterministic."""

import hashlib
import json
import pathlib

from reportlab.lib.pagesizes import letter
from reportlab.lib.units import inch
from reportlab.pdfbase import pdfmetrics
from reportlab.pdfbase.ttfonts import TTFont
from reportlab.pdfgen import canvas
from reportlab.lib import pdfencrypt

HERE = pathlib.Path(__file__).resolve().parent
DEJAVU = "/usr/share/fonts/truetype/dejavu/DejaVuSans.ttf"

PARAGRAPH_1 = [
    "The river was quiet in the early morning.",
    "Birds moved along the bank looking for food.",
]
PARAGRAPH_2 = [
    "Later the town woke up and the boats went out.",
    "By noon the water was busy again.",
]


def new_canvas(name, **kw):
    return canvas.Canvas(str(HERE / name), pagesize=letter, invariant=1, **kw)


def hello():
    c = new_canvas("hello.pdf", pageCompression=0)
    c.setFont("Helvetica", 14)
    c.drawString(inch, 10 * inch, "Hello world")
    c.showPage()
    c.save()


def lines(c, y, texts, leading=15):
    for t in texts:
        c.drawString(inch, y, t)
        y -= leading
    return y


def two_paragraphs():
    c = new_canvas("two_paragraphs.pdf", pageCompression=1)
    c.setFont("Times-Roman", 12)
    y = lines(c, 10 * inch, PARAGRAPH_1)
    lines(c, y - 18, PARAGRAPH_2)
    c.showPage()
    c.save()


def two_pages():
    c = new_canvas("two_pages.pdf", pageCompression=1)
    c.setFont("Helvetica", 12)
    lines(c, 10 * inch, PARAGRAPH_1)
    c.showPage()
    c.setFont("Helvetica", 12)
    lines(c, 10 * inch, PARAGRAPH_2)
    c.showPage()
    c.save()


def unicode_ttf():
    pdfmetrics.registerFont(TTFont("DejaVuSans", DEJAVU))
    c = new_canvas("unicode.pdf", pageCompression=1)
    c.setFont("DejaVuSans", 12)
    c.drawString(inch, 10 * inch, "Café au lait, naïve résumé.")
    c.drawString(inch, 10 * inch - 15, "“Quoted” words don’t break.")
    c.showPage()
    c.save()


def image_only():
    c = new_canvas("image_only.pdf", pageCompression=1)
    for i in range(8):
        c.setFillColorRGB(i / 8, 0.3, 1 - i / 8)
        c.rect(inch + i * 40, 8 * inch, 36, 120, fill=1, stroke=0)
    c.showPage()
    c.save()


def encrypted():
    enc = pdfencrypt.StandardEncryption("user", "owner", canPrint=0)
    c = new_canvas("encrypted.pdf", encrypt=enc)
    c.setFont("Helvetica", 12)
    c.drawString(inch, 10 * inch, "This text is locked away.")
    c.showPage()
    c.save()


def object_streams():
    # PDF 1.5 layout: objects packed into object streams, xref stream.
    try:
        import pikepdf
    except ImportError:
        print("pikepdf missing; keeping two_paragraphs_objstm.pdf as is")
        return
    with pikepdf.open(HERE / "two_paragraphs.pdf") as pdf:
        pdf.save(HERE / "two_paragraphs_objstm.pdf",
                 object_stream_mode=pikepdf.ObjectStreamMode.generate,
                 deterministic_id=True, compress_streams=True)


def expected():
    # What a text-layer extractor should return, built from the strings
    # drawn above rather than from any extractor's output.
    two = "\n".join(PARAGRAPH_1) + "\n\n" + "\n".join(PARAGRAPH_2)
    texts = {
        "hello.pdf": "Hello world",
        "two_paragraphs.pdf": two,
        "two_paragraphs_objstm.pdf": two,
        "two_pages.pdf": two,
        "unicode.pdf": "Café au lait, naïve résumé.\n“Quoted” words don’t break.",
    }
    failures = {"image_only.pdf": "no_text_layer", "encrypted.pdf": "encrypted"}
    out = {name: {"text": t, "sha256": hashlib.sha256(t.encode()).hexdigest()}
           for name, t in texts.items()}
    out.update({name: {"failure": reason} for name, reason in failures.items()})
    (HERE / "pdf_expected.json").write_text(
        json.dumps(out, indent=1, ensure_ascii=False) + "\n", encoding="utf-8")


if __name__ == "__main__":
    hello()
    two_paragraphs()
    two_pages()
    unicode_ttf()
    image_only()
    encrypted()
    object_streams()
    expected()
    for p in sorted(HERE.glob("*.pdf")):
        print(p.name, p.stat().st_size)
