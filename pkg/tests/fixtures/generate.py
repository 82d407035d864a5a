"""Regenerates the committed snapshot fixtures, manifest.csv, and truth.csv.

Run from the repository root:

    python3 tests/fixtures/generate.py

The fixtures are checked in; rerunning this script must be a no-op unless a
fixture definition below changed. Every page is hand-labeled in TRUTH_FLAGS,
which generate.py serializes to truth.csv for the accuracy harness.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

from consent_audit.snapshot import (
    BBox,
    BlockKind,
    ElementNode,
    Frame,
    PageSnapshot,
    Position,
    RGBA,
    Status,
    StyleProps,
    TcfApi,
    TcfProbe,
    TextDecoration,
    Viewport,
    save_snapshot,
)

HERE = Path(__file__).resolve().parent
SNAPSHOT_DIR = HERE / "snapshots"
CAPTURED_AT = "2026-08-20T12:00:00Z"
VIEWPORT = Viewport(1280, 720)

BLUE = RGBA(16, 112, 224)
WHITE = RGBA(255, 255, 255)
GREY = RGBA(240, 240, 240)


def el(
    node_id: int,
    tag: str = "div",
    *,
    text: str = "",
    attrs: dict[str, str] | None = None,
    children: tuple[ElementNode, ...] = (),
    bbox: tuple[float, float, float, float] | None = None,
    has_listener: bool = False,
    shadow_host: bool = False,
    **style_kw,
) -> ElementNode:
    if isinstance(style_kw.get("position"), str):
        style_kw["position"] = Position(style_kw["position"])
    if isinstance(style_kw.get("text_decoration"), str):
        style_kw["text_decoration"] = TextDecoration(style_kw["text_decoration"])
    return ElementNode(
        node_id=node_id,
        tag=tag,
        attributes=dict(attrs or {}),
        text=text,
        style=StyleProps(**style_kw),
        bbox=BBox(*bbox) if bbox is not None else None,
        has_listener=has_listener,
        shadow_host=shadow_host,
        children=children,
    )


def button(node_id: int, label: str, *, bg: RGBA | None = None, **kw) -> ElementNode:
    kw.setdefault("bbox", (40, 620, 160, 40))
    return el(node_id, "button", text=label, background_color=bg, **kw)


def overlay(
    node_id: int,
    children: tuple[ElementNode, ...],
    *,
    z: int = 1000,
    attrs: dict[str, str] | None = None,
    bbox: tuple[float, float, float, float] = (0, 420, 1280, 300),
    position: str = "fixed",
    bg: RGBA = WHITE,
) -> ElementNode:
    return el(
        node_id,
        attrs=attrs,
        children=children,
        bbox=bbox,
        position=position,
        z_index=z,
        background_color=bg,
    )


def shell(*subtrees: ElementNode, url: str, tcf: TcfProbe | None = None) -> PageSnapshot:
    """A page with some plain content plus the given subtrees in the body."""
    body = el(
        2,
        "body",
        children=(
            el(3, "h1", text="Welcome", bbox=(40, 20, 400, 40)),
            el(
                4,
                "p",
                text="Plain article text about something entirely unrelated.",
                bbox=(40, 80, 800, 120),
            ),
            *subtrees,
        ),
        bbox=(0, 0, 1280, 2000),
    )
    return PageSnapshot(
        url=url,
        captured_at=CAPTURED_AT,
        status=Status.SUCCESS,
        viewport=VIEWPORT,
        root=el(1, "html", children=(body,), bbox=(0, 0, 1280, 2000)),
        frames=(),
        tcf_result=tcf,
    )


def banner_fixture(
    url: str,
    notice: str,
    buttons: tuple[ElementNode, ...],
    *,
    z: int = 1000,
    attrs: dict[str, str] | None = None,
    tcf: TcfProbe | None = None,
    extra: tuple[ElementNode, ...] = (),
) -> PageSnapshot:
    children = (
        el(11, "p", text=notice, bbox=(40, 440, 1000, 60)),
        *buttons,
        *extra,
    )
    return shell(overlay(10, children, z=z, attrs=attrs), url=url, tcf=tcf)


@dataclass(frozen=True)
class Fixture:
    name: str
    country: str
    rank: int
    snapshot: PageSnapshot
    # Eight hand labels: interface, accept, reject, settings, save, pay,
    # checkbox, prechecked.
    flags: tuple[int, int, int, int, int, int, int, int]


def _url(name: str) -> str:
    return f"https://{name.replace('_', '-')}.example/"


def checkbox(node_id: int, label: str, *, checked: bool = False, disabled: bool = False) -> ElementNode:
    attrs = {"type": "checkbox", "aria-label": label}
    if checked:
        attrs["checked"] = ""
    if disabled:
        attrs["disabled"] = ""
    return el(node_id, "input", attrs=attrs, bbox=(600, 620, 20, 20))


def build_fixtures() -> list[Fixture]:
    fixtures: list[Fixture] = []

    def add(name, country, snapshot, flags):
        fixtures.append(
            Fixture(
                name=name,
                country=country,
                rank=len(fixtures) + 1,
                snapshot=snapshot,
                flags=flags,
            )
        )

    # --- consent interfaces across languages -------------------------------------

    add(
        "de_simple",
        "de",
        banner_fixture(
            _url("de_simple"),
            "Wir verwenden Cookies, um Inhalte zu personalisieren.",
            (
                button(12, "Alle akzeptieren", bg=BLUE),
                button(13, "Ablehnen", bg=BLUE, bbox=(220, 620, 160, 40)),
                button(14, "Einstellungen", bbox=(400, 620, 160, 40)),
            ),
        ),
        (1, 1, 1, 1, 0, 0, 0, 0),
    )
    add(
        "fr_paywall",
        "fr",
        banner_fixture(
            _url("fr_paywall"),
            "Nous utilisons des cookies pour mesurer notre audience.",
            (
                button(12, "Tout accepter", bg=BLUE),
                button(13, "Continuer sans accepter", bbox=(220, 620, 240, 40)),
                button(14, "S'abonner", bbox=(480, 620, 160, 40)),
            ),
        ),
        (1, 1, 1, 0, 0, 1, 0, 0),
    )
    add(
        "en_minimal",
        "gb",
        banner_fixture(
            _url("en_minimal"),
            "This site uses cookies to deliver its services.",
            (button(12, "OK", bg=BLUE),),
        ),
        (1, 1, 0, 0, 0, 0, 0, 0),
    )
    add(
        "en_full_compliant",
        "gb",
        banner_fixture(
            _url("en_full_compliant"),
            "We use cookies. Choose which purposes you allow.",
            (
                button(12, "Accept all", bg=BLUE),
                button(13, "Reject all", bg=BLUE, bbox=(220, 620, 160, 40)),
                button(14, "Settings", bbox=(400, 620, 160, 40)),
            ),
            extra=(
                checkbox(15, "Analytics"),
                checkbox(16, "Marketing"),
            ),
        ),
        (1, 1, 1, 1, 0, 0, 1, 0),
    )
    add(
        "es_prechecked",
        "es",
        banner_fixture(
            _url("es_prechecked"),
            "Usamos cookies para personalizar el contenido.",
            (
                button(12, "Aceptar todo", bg=BLUE),
                button(13, "Rechazar todo", bg=BLUE, bbox=(220, 620, 160, 40)),
            ),
            extra=(checkbox(15, "Marketing", checked=True),),
        ),
        (1, 1, 1, 0, 0, 0, 1, 1),
    )
    add(
        "it_settings",
        "it",
        banner_fixture(
            _url("it_settings"),
            "Questo sito utilizza cookie tecnici e di profilazione.",
            (
                button(12, "Accetta tutto", bg=BLUE),
                button(13, "Personalizza", bbox=(220, 620, 160, 40)),
            ),
        ),
        (1, 1, 0, 1, 0, 0, 0, 0),
    )
    add(
        "nl_unequal",
        "nl",
        banner_fixture(
            _url("nl_unequal"),
            "Wij gebruiken cookies om de website te verbeteren.",
            (
                button(12, "Alles accepteren", bg=BLUE),
                button(13, "Weigeren", bbox=(220, 620, 160, 40)),
            ),
        ),
        (1, 1, 1, 0, 0, 0, 0, 0),
    )
    add(
        "pl_save",
        "pl",
        banner_fixture(
            _url("pl_save"),
            "Ta strona korzysta z plikow cookies w celach statystycznych.",
            (
                button(12, "Zaakceptuj wszystkie", bg=BLUE),
                button(13, "Odrzuc", bg=BLUE, bbox=(220, 620, 160, 40)),
                button(14, "Zapisz ustawienia", bbox=(400, 620, 180, 40)),
            ),
        ),
        (1, 1, 1, 0, 1, 0, 0, 0),
    )
    add(
        "pt_banner",
        "pt",
        banner_fixture(
            _url("pt_banner"),
            "Utilizamos cookies para melhorar a sua experiencia.",
            (
                button(12, "Aceitar todos", bg=BLUE),
                button(13, "Rejeitar", bg=BLUE, bbox=(220, 620, 160, 40)),
            ),
        ),
        (1, 1, 1, 0, 0, 0, 0, 0),
    )
    add(
        "sv_banner",
        "se",
        banner_fixture(
            _url("sv_banner"),
            "Vi anvander cookies for att forbattra din upplevelse.",
            (
                button(12, "Acceptera alla", bg=BLUE),
                button(13, "Neka alla", bg=BLUE, bbox=(220, 620, 160, 40)),
                button(14, "Installningar", bbox=(400, 620, 160, 40)),
            ),
        ),
        (1, 1, 1, 1, 0, 0, 0, 0),
    )
    add(
        "da_banner",
        "dk",
        banner_fixture(
            _url("da_banner"),
            "Vi bruger cookies til at forbedre webstedet.",
            (
                button(12, "Accepter alle", bg=BLUE),
                button(13, "Afvis alle", bg=BLUE, bbox=(220, 620, 160, 40)),
            ),
        ),
        (1, 1, 1, 0, 0, 0, 0, 0),
    )
    add(
        "fi_banner",
        "fi",
        banner_fixture(
            _url("fi_banner"),
            "Kaytamme evasteita. Evasteet auttavat meita, ja cookies-asetukset voi vaihtaa.",
            (
                button(12, "Hyvaksy kaikki", bg=BLUE),
                button(13, "Hylkaa kaikki", bg=BLUE, bbox=(220, 620, 160, 40)),
            ),
        ),
        (1, 1, 1, 0, 0, 0, 0, 0),
    )
    add(
        "cs_banner",
        "cz",
        banner_fixture(
            _url("cs_banner"),
            "Tento web pouziva k poskytovani sluzeb soubory cookie.",
            (
                button(12, "Prijmout vse", bg=BLUE),
                button(13, "Odmitnout vse", bg=BLUE, bbox=(220, 620, 160, 40)),
            ),
        ),
        (1, 1, 1, 0, 0, 0, 0, 0),
    )
    add(
        "el_banner",
        "gr",
        banner_fixture(
            _url("el_banner"),
            "Χρησιμοποιούμε cookies για την ανάλυση της επισκεψιμότητας.",
            (
                button(12, "Αποδοχή όλων", bg=BLUE),
                button(13, "Απόρριψη", bg=BLUE, bbox=(220, 620, 160, 40)),
            ),
        ),
        (1, 1, 1, 0, 0, 0, 0, 0),
    )
    add(
        "hu_banner",
        "hu",
        banner_fixture(
            _url("hu_banner"),
            "Weboldalunk cookie-kat hasznal a jobb elmenyert.",
            (
                button(12, "Összes elfogadása", bg=BLUE),
                button(13, "Elutasítás", bg=BLUE, bbox=(220, 620, 160, 40)),
            ),
        ),
        (1, 1, 1, 0, 0, 0, 0, 0),
    )
    add(
        "ro_banner",
        "ro",
        banner_fixture(
            _url("ro_banner"),
            "Folosim cookie-uri pentru a personaliza continutul.",
            (
                button(12, "Accepta tot", bg=BLUE),
                button(13, "Respinge", bg=BLUE, bbox=(220, 620, 160, 40)),
            ),
        ),
        (1, 1, 1, 0, 0, 0, 0, 0),
    )
    add(
        "bg_banner",
        "bg",
        banner_fixture(
            _url("bg_banner"),
            "Този сайт използва бисквитки (cookies) за подобряване на услугите.",
            (
                button(12, "Приемам", bg=BLUE),
                button(13, "Отхвърляне", bg=BLUE, bbox=(220, 620, 160, 40)),
            ),
        ),
        (1, 1, 1, 0, 0, 0, 0, 0),
    )
    add(
        "et_banner",
        "ee",
        banner_fixture(
            _url("et_banner"),
            "Kasutame kupsiseid, et pakkuda paremat teenust. Cookies on vajalikud.",
            (button(12, "Nõustun", bg=BLUE),),
        ),
        (1, 1, 0, 0, 0, 0, 0, 0),
    )
    add(
        "lt_banner",
        "lt",
        banner_fixture(
            _url("lt_banner"),
            "Svetaineje naudojami slapukai (cookies) statistikos tikslais.",
            (
                button(12, "Priimti visus", bg=BLUE),
                button(13, "Atmesti visus", bg=BLUE, bbox=(220, 620, 160, 40)),
            ),
        ),
        (1, 1, 1, 0, 0, 0, 0, 0),
    )
    add(
        "hr_banner",
        "hr",
        banner_fixture(
            _url("hr_banner"),
            "Ova stranica koristi kolacice (cookies) za analizu prometa.",
            (
                button(12, "Prihvati sve", bg=BLUE),
                button(13, "Postavke", bbox=(220, 620, 160, 40)),
            ),
        ),
        (1, 1, 0, 1, 0, 0, 0, 0),
    )

    # --- CMP attribution ----------------------------------------------------------

    add(
        "onetrust_tcf",
        "de",
        banner_fixture(
            _url("onetrust_tcf"),
            "We use cookies to analyse traffic.",
            (
                button(12, "Accept all", bg=BLUE),
                button(13, "Reject all", bg=BLUE, bbox=(220, 620, 160, 40)),
            ),
            attrs={"id": "onetrust-banner-sdk"},
            tcf=TcfProbe(api=TcfApi.TCFAPI, cmp_id=28),
        ),
        (1, 1, 1, 0, 0, 0, 0, 0),
    )
    add(
        "cookiebot_selector",
        "dk",
        banner_fixture(
            _url("cookiebot_selector"),
            "We use cookies to personalise content and ads.",
            (
                button(12, "Accept all", bg=BLUE),
                button(13, "Deny", bg=BLUE, bbox=(220, 620, 160, 40)),
            ),
            attrs={"id": "CybotCookiebotDialog"},
        ),
        (1, 1, 1, 0, 0, 0, 0, 0),
    )
    add(
        "sourcepoint_tcf",
        "fr",
        banner_fixture(
            _url("sourcepoint_tcf"),
            "Nos partenaires et nous utilisons des cookies.",
            (
                button(12, "Accepter", bg=BLUE),
                button(13, "Refuser", bg=BLUE, bbox=(220, 620, 160, 40)),
            ),
            tcf=TcfProbe(api=TcfApi.TCFAPI, cmp_id=6),
        ),
        (1, 1, 1, 0, 0, 0, 0, 0),
    )
    add(
        "quantcast_selector",
        "ie",
        banner_fixture(
            _url("quantcast_selector"),
            "We and our partners store cookies on your device.",
            (
                button(12, "Agree", bg=BLUE),
                button(13, "More options", bbox=(220, 620, 160, 40)),
            ),
            attrs={"class": "qc-cmp2-ui qc-shown"},
        ),
        (1, 1, 0, 1, 0, 0, 0, 0),
    )
    add(
        "didomi_selector",
        "fr",
        banner_fixture(
            _url("didomi_selector"),
            "En poursuivant, vous acceptez nos cookies.",
            (
                button(12, "Accepter tout", bg=BLUE),
                button(13, "Paramétrer", bbox=(220, 620, 160, 40)),
            ),
            attrs={"id": "didomi-host"},
        ),
        (1, 1, 0, 1, 0, 0, 0, 0),
    )

    # --- structural variants --------------------------------------------------------

    shadow_overlay = el(
        20,
        attrs={"id": "consent-root"},
        shadow_host=True,
        bbox=(0, 420, 1280, 300),
        children=(
            overlay(
                21,
                (
                    el(22, "p", text="We use cookies inside a shadow root.", bbox=(40, 440, 800, 40)),
                    button(23, "Accept all", bg=BLUE),
                    button(24, "Reject all", bg=BLUE, bbox=(220, 620, 160, 40)),
                ),
            ),
        ),
    )
    add(
        "shadow_banner",
        "de",
        shell(shadow_overlay, url=_url("shadow_banner")),
        (1, 1, 1, 0, 0, 0, 0, 0),
    )

    frame_root = el(
        30,
        "html",
        bbox=(0, 0, 1280, 720),
        children=(
            el(
                31,
                "body",
                bbox=(0, 0, 1280, 720),
                children=(
                    overlay(
                        32,
                        (
                            el(33, "p", text="Our partners use cookies for ads.", bbox=(40, 440, 800, 40)),
                            button(34, "Accept all", bg=BLUE),
                            button(35, "Reject all", bg=BLUE, bbox=(220, 620, 160, 40)),
                        ),
                    ),
                ),
            ),
        ),
    )
    framed = shell(url=_url("iframe_banner"))
    framed = PageSnapshot(
        url=framed.url,
        captured_at=framed.captured_at,
        status=framed.status,
        viewport=framed.viewport,
        root=framed.root,
        frames=(Frame(frame_id="frame-1", root=frame_root),),
        tcf_result=None,
    )
    add("iframe_banner", "fr", framed, (1, 1, 1, 0, 0, 0, 0, 0))

    add(
        "typo_label",
        "gb",
        banner_fixture(
            _url("typo_label"),
            "Cookies help us deliver our services.",
            (
                button(12, "Acccept all", bg=BLUE),
                button(13, "Reject all", bg=BLUE, bbox=(220, 620, 160, 40)),
            ),
        ),
        (1, 1, 1, 0, 0, 0, 0, 0),
    )
    add(
        "attr_label",
        "gb",
        banner_fixture(
            _url("attr_label"),
            "We store cookies on your browser.",
            (
                el(
                    12,
                    "button",
                    attrs={"aria-label": "Accept cookies"},
                    bbox=(40, 620, 48, 48),
                    background_color=BLUE,
                ),
                button(13, "Decline", bg=BLUE, bbox=(220, 620, 160, 40)),
            ),
        ),
        (1, 1, 1, 0, 0, 0, 0, 0),
    )
    add(
        "value_label",
        "gb",
        banner_fixture(
            _url("value_label"),
            "Cookie consent is required before you continue.",
            (
                el(
                    12,
                    "input",
                    attrs={"type": "submit", "value": "Accept all"},
                    bbox=(40, 620, 160, 40),
                    background_color=BLUE,
                ),
                el(
                    13,
                    "input",
                    attrs={"type": "button", "value": "Reject all"},
                    bbox=(220, 620, 160, 40),
                    background_color=BLUE,
                ),
            ),
        ),
        (1, 1, 1, 0, 0, 0, 0, 0),
    )
    add(
        "listener_div",
        "gb",
        banner_fixture(
            _url("listener_div"),
            "By continuing you accept our cookies.",
            (
                el(
                    12,
                    "div",
                    text="Got it",
                    has_listener=True,
                    bbox=(40, 620, 120, 40),
                    background_color=BLUE,
                ),
            ),
        ),
        (1, 1, 0, 0, 0, 0, 0, 0),
    )

    inner = overlay(
        15,
        (
            el(16, "p", text="Manage your cookies preferences here.", bbox=(60, 460, 600, 40)),
            button(17, "Accept all", bg=BLUE, bbox=(60, 620, 160, 40)),
        ),
        z=1100,
        bbox=(20, 440, 1000, 240),
    )
    outer = overlay(
        10,
        (
            el(11, "p", text="This website uses cookies for analytics.", bbox=(40, 430, 800, 30)),
            inner,
            button(12, "Reject all", bg=BLUE, bbox=(240, 620, 160, 40)),
        ),
    )
    add(
        "nested_banners",
        "de",
        shell(outer, url=_url("nested_banners")),
        (1, 1, 1, 0, 0, 0, 0, 0),
    )

    main_banner = overlay(
        10,
        (
            el(
                11,
                "p",
                text="We use cookies and similar technologies to provide, protect and improve our services and to personalise content.",
                bbox=(40, 440, 1000, 60),
            ),
            button(12, "Accept all", bg=BLUE),
            button(13, "Reject all", bg=BLUE, bbox=(220, 620, 160, 40)),
        ),
    )
    stub = overlay(
        40,
        (el(41, "p", text="Cookie notice", bbox=(1000, 20, 200, 30)),),
        z=900,
        bbox=(1000, 10, 240, 60),
    )
    add(
        "multi_banner",
        "gb",
        shell(main_banner, stub, url=_url("multi_banner")),
        (1, 1, 1, 0, 0, 0, 0, 0),
    )

    offscreen = overlay(
        10,
        (
            el(11, "p", text="We use cookies. Slide-in consent panel.", bbox=(1300, 420, 400, 200)),
            button(12, "Accept all", bg=BLUE, bbox=(1320, 560, 160, 40)),
        ),
        bbox=(1300, 420, 420, 260),
    )
    add(
        "offscreen_banner",
        "gb",
        shell(offscreen, url=_url("offscreen_banner")),
        (1, 1, 0, 0, 0, 0, 0, 0),
    )

    add(
        "z11_banner",
        "gb",
        banner_fixture(
            _url("z11_banner"),
            "Cookies make this site work properly.",
            (button(12, "Accept all", bg=BLUE),),
            z=11,
        ),
        (1, 1, 0, 0, 0, 0, 0, 0),
    )

    gate = overlay(
        50,
        (
            el(51, "p", text="You must be 18 years or older to enter. We also use cookies.", bbox=(40, 200, 800, 40)),
            button(52, "Enter", bbox=(40, 300, 120, 40)),
        ),
        z=3000,
        bbox=(0, 0, 1280, 720),
    )
    clean = overlay(
        10,
        (
            el(11, "p", text="We use cookies to improve your experience.", bbox=(40, 440, 800, 40)),
            button(12, "Accept all", bg=BLUE),
            button(13, "Reject all", bg=BLUE, bbox=(220, 620, 160, 40)),
        ),
    )
    add(
        "age_gate_plus_banner",
        "us",
        shell(gate, clean, url=_url("age_gate_plus_banner")),
        (1, 1, 1, 0, 0, 0, 0, 0),
    )

    add(
        "disabled_necessary",
        "de",
        banner_fixture(
            _url("disabled_necessary"),
            "Wir verwenden Cookies. Notwendige Cookies sind immer aktiv.",
            (
                button(12, "Alle akzeptieren", bg=BLUE),
                button(13, "Auswahl speichern", bg=BLUE, bbox=(220, 620, 180, 40)),
            ),
            extra=(
                checkbox(15, "Notwendig", checked=True, disabled=True),
                checkbox(16, "Statistik"),
            ),
        ),
        (1, 1, 0, 0, 1, 0, 1, 0),
    )

    role_checkbox = el(
        15,
        "span",
        attrs={"role": "checkbox", "aria-checked": "true", "aria-label": "Analitica"},
        bbox=(600, 620, 20, 20),
    )
    add(
        "role_checkbox_prechecked",
        "it",
        banner_fixture(
            _url("role_checkbox_prechecked"),
            "Questo sito usa i cookie per le statistiche.",
            (
                button(12, "Accetta tutto", bg=BLUE),
                button(13, "Rifiuta", bg=BLUE, bbox=(220, 620, 160, 40)),
            ),
            extra=(role_checkbox,),
        ),
        (1, 1, 1, 0, 0, 0, 1, 1),
    )

    # --- pages without a consent interface ---------------------------------------

    add("plain_page", "gb", shell(url=_url("plain_page")), (0,) * 8)

    nav = el(
        10,
        "nav",
        position="fixed",
        z_index=100,
        bbox=(0, 0, 1280, 60),
        background_color=GREY,
        children=(
            el(11, "a", text="Home", bbox=(20, 10, 80, 40)),
            el(12, "a", text="About", bbox=(120, 10, 80, 40)),
            el(13, "a", text="Contact", bbox=(220, 10, 80, 40)),
        ),
    )
    add("fixed_nav", "gb", shell(nav, url=_url("fixed_nav")), (0,) * 8)

    age_gate = overlay(
        10,
        (
            el(11, "p", text="This site contains alcohol advertising. Visitors must be 18 years or older. We use cookies to remember your choice.", bbox=(40, 200, 900, 60)),
            button(12, "Enter", bbox=(40, 300, 120, 40)),
        ),
        z=3000,
        bbox=(0, 0, 1280, 720),
    )
    add("age_gate", "us", shell(age_gate, url=_url("age_gate")), (0,) * 8)

    z10 = overlay(
        10,
        (
            el(11, "p", text="We use cookies to improve this website.", bbox=(40, 440, 800, 40)),
            button(12, "Accept all", bg=BLUE),
        ),
        z=10,
    )
    add("z10_boundary", "gb", shell(z10, url=_url("z10_boundary")), (0,) * 8)

    absolute = overlay(
        10,
        (
            el(11, "p", text="We use cookies for site analytics.", bbox=(40, 440, 800, 40)),
            button(12, "Accept all", bg=BLUE),
        ),
        position="absolute",
    )
    add("absolute_overlay", "gb", shell(absolute, url=_url("absolute_overlay")), (0,) * 8)

    footer = el(
        10,
        "footer",
        bbox=(0, 1800, 1280, 200),
        children=(
            el(11, "a", text="Cookie policy", bbox=(40, 1820, 160, 30)),
            el(12, "a", text="Privacy", bbox=(220, 1820, 120, 30)),
        ),
    )
    add("footer_policy", "gb", shell(footer, url=_url("footer_policy")), (0,) * 8)

    article = el(
        10,
        "article",
        bbox=(40, 200, 900, 1200),
        children=(
            el(11, "h2", text="What are cookies?", bbox=(40, 210, 400, 40)),
            el(
                12,
                "p",
                text="Cookies are small text files stored by your browser. This long article explains cookie consent banners and how to audit them.",
                bbox=(40, 260, 900, 400),
            ),
        ),
    )
    add("policy_article", "gb", shell(article, url=_url("policy_article")), (0,) * 8)

    newsletter = overlay(
        10,
        (
            el(11, "p", text="Subscribe to our newsletter for weekly updates!", bbox=(340, 240, 600, 40)),
            el(
                12,
                "input",
                attrs={"type": "email", "placeholder": "you@example.com"},
                bbox=(340, 300, 400, 40),
            ),
            button(13, "Subscribe", bg=BLUE, bbox=(760, 300, 140, 40)),
        ),
        z=2000,
        bbox=(320, 200, 640, 240),
    )
    add("newsletter_modal", "gb", shell(newsletter, url=_url("newsletter_modal")), (0,) * 8)

    chat = overlay(
        10,
        (el(11, "span", text="Chat with us", bbox=(1130, 660, 120, 40)),),
        z=2000,
        bbox=(1120, 650, 140, 60),
        bg=BLUE,
    )
    add("chat_widget", "gb", shell(chat, url=_url("chat_widget")), (0,) * 8)

    unreachable = PageSnapshot(
        url=_url("unreachable_site"),
        captured_at=CAPTURED_AT,
        status=Status.UNREACHABLE,
        viewport=VIEWPORT,
        root=None,
        frames=(),
    )
    add("unreachable_site", "de", unreachable, (0,) * 8)

    blocked_403 = PageSnapshot(
        url=_url("blocked_403"),
        captured_at=CAPTURED_AT,
        status=Status.BLOCKED,
        viewport=VIEWPORT,
        root=None,
        frames=(),
        block_kind=BlockKind.HTTP_403,
    )
    add("blocked_403", "fr", blocked_403, (0,) * 8)

    blocked_captcha = PageSnapshot(
        url=_url("blocked_captcha"),
        captured_at=CAPTURED_AT,
        status=Status.BLOCKED,
        viewport=VIEWPORT,
        root=None,
        frames=(),
        block_kind=BlockKind.CAPTCHA,
    )
    add("blocked_captcha", "gb", blocked_captcha, (0,) * 8)

    empty = PageSnapshot(
        url=_url("empty_page"),
        captured_at=CAPTURED_AT,
        status=Status.SUCCESS,
        viewport=VIEWPORT,
        root=el(1, "html", children=(el(2, "body"),)),
        frames=(),
    )
    add("empty_page", "gb", empty, (0,) * 8)

    zero_z = overlay(
        10,
        (
            el(11, "p", text="We use cookies on this page.", bbox=(40, 440, 800, 40)),
            button(12, "Accept all", bg=BLUE),
        ),
        z=0,
    )
    add("zero_z_overlay", "gb", shell(zero_z, url=_url("zero_z_overlay")), (0,) * 8)

    auto_z = el(
        10,
        position="fixed",
        bbox=(0, 420, 1280, 300),
        background_color=WHITE,
        children=(
            el(11, "p", text="Cookie notice without stacking context.", bbox=(40, 440, 800, 40)),
            button(12, "Accept all", bg=BLUE),
        ),
    )
    add("auto_z_overlay", "gb", shell(auto_z, url=_url("auto_z_overlay")), (0,) * 8)

    inline_notice = el(
        10,
        bbox=(40, 300, 900, 80),
        children=(
            el(11, "p", text="We use cookies. See our cookie policy for details.", bbox=(40, 310, 800, 40)),
        ),
    )
    add("inline_notice", "gb", shell(inline_notice, url=_url("inline_notice")), (0,) * 8)

    consent_frame_static = el(
        30,
        "html",
        bbox=(0, 0, 400, 300),
        children=(
            el(
                31,
                "body",
                bbox=(0, 0, 400, 300),
                children=(
                    el(32, "p", text="Ad frame mentioning cookies.", bbox=(10, 10, 300, 40)),
                ),
            ),
        ),
    )
    static_framed = shell(url=_url("static_ad_frame"))
    static_framed = PageSnapshot(
        url=static_framed.url,
        captured_at=static_framed.captured_at,
        status=static_framed.status,
        viewport=static_framed.viewport,
        root=static_framed.root,
        frames=(Frame(frame_id="ad-1", root=consent_frame_static),),
    )
    add("static_ad_frame", "gb", static_framed, (0,) * 8)

    return fixtures


def main() -> None:
    fixtures = build_fixtures()
    SNAPSHOT_DIR.mkdir(parents=True, exist_ok=True)

    manifest_rows = []
    truth_rows = []
    for fixture in fixtures:
        filename = f"{fixture.name}.json"
        save_snapshot(fixture.snapshot, SNAPSHOT_DIR / filename)
        manifest_rows.append(
            [fixture.snapshot.url, fixture.country, str(fixture.rank), f"snapshots/{filename}"]
        )
        truth_rows.append([fixture.snapshot.url, fixture.country, *map(str, fixture.flags)])

    with open(HERE / "manifest.csv", "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["url", "country", "rank", "snapshot_path"])
        writer.writerows(manifest_rows)

    with open(HERE / "truth.csv", "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            [
                "url",
                "group",
                "has_interface",
                "has_accept",
                "has_reject",
                "has_settings",
                "has_save",
                "has_pay",
                "has_checkbox",
                "has_prechecked",
            ]
        )
        writer.writerows(truth_rows)

    print(f"wrote {len(fixtures)} snapshots to {SNAPSHOT_DIR}")


if __name__ == "__main__":
    main()
