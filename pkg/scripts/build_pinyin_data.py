#!/usr/bin/env python3
"""Regenerate src/pygec/data/pinyin_dict.tsv from the curated tables below.

The dictionary is hand-curated rather than pulled from a third-party
package: coverage targets the few thousand most common simplified
characters, which is all the synthesis and conversion paths need.
GROUPS lists characters by primary reading, SECONDARY adds alternative
readings per character, OVERRIDES fixes multi-character words whose
reading differs from the per-character primaries.

Run from the repository root:

    python scripts/build_pinyin_data.py
"""

from __future__ import annotations

from pathlib import Path

# (rendered syllable, characters whose PRIMARY reading it is)
GROUPS: list[tuple[str, str]] = [
    ("a1", "阿"),
    ("ai1", "哀唉哎埃"),
    ("ai2", "癌挨"),
    ("ai3", "矮"),
    ("ai4", "爱艾碍"),
    ("an1", "安氨鞍"),
    ("an4", "按案暗岸"),
    ("ang2", "昂"),
    ("ao2", "熬"),
    ("ao4", "奥傲澳懊"),
    ("ba1", "八巴疤芭扒"),
    ("ba2", "拔"),
    ("ba3", "把靶"),
    ("ba4", "爸坝罢霸"),
    ("ba5", "吧"),
    ("bai2", "白"),
    ("bai3", "百摆柏"),
    ("bai4", "败拜"),
    ("ban1", "班般搬斑颁"),
    ("ban3", "板版"),
    ("ban4", "办半伴扮拌瓣"),
    ("bang1", "帮邦"),
    ("bang3", "绑榜膀"),
    ("bang4", "棒傍磅镑"),
    ("bao1", "包胞苞褒"),
    ("bao2", "薄雹"),
    ("bao3", "保宝饱堡"),
    ("bao4", "报抱暴爆豹"),
    ("bei1", "杯悲碑卑"),
    ("bei3", "北"),
    ("bei4", "被备倍背辈贝狈"),
    ("ben1", "奔"),
    ("ben3", "本"),
    ("ben4", "笨"),
    ("bi1", "逼"),
    ("bi2", "鼻"),
    ("bi3", "比笔彼鄙"),
    ("bi4", "必避闭毕壁碧弊币臂蔽"),
    ("bian1", "边编鞭蝙"),
    ("bian3", "扁贬"),
    ("bian4", "变便遍辩辨辫"),
    ("biao1", "标彪"),
    ("biao3", "表"),
    ("bie2", "别"),
    ("bin1", "宾滨"),
    ("bing1", "冰兵"),
    ("bing3", "丙饼柄"),
    ("bing4", "病并"),
    ("bo1", "波拨玻播菠剥"),
    ("bo2", "博伯脖搏膊泊"),
    ("bu3", "补捕卜"),
    ("bu4", "不部布步怖簿"),
    ("ca1", "擦"),
    ("cai1", "猜"),
    ("cai2", "才财材裁"),
    ("cai3", "采彩踩睬"),
    ("cai4", "菜蔡"),
    ("can1", "参餐"),
    ("can2", "残蚕惭"),
    ("can3", "惨"),
    ("can4", "灿"),
    ("cang1", "仓苍舱"),
    ("cang2", "藏"),
    ("cao1", "操糙"),
    ("cao3", "草"),
    ("ce4", "测侧厕策册"),
    ("ceng2", "层曾"),
    ("cha1", "插叉差"),
    ("cha2", "查茶察"),
    ("cha4", "岔诧"),
    ("chai1", "拆"),
    ("chan2", "馋缠蝉"),
    ("chan3", "产铲"),
    ("chan4", "颤"),
    ("chang2", "长常尝肠偿"),
    ("chang3", "厂场"),
    ("chang4", "唱畅倡"),
    ("chao1", "超抄钞"),
    ("chao2", "朝潮巢"),
    ("chao3", "吵炒"),
    ("che1", "车"),
    ("che4", "彻撤"),
    ("chen2", "陈沉尘晨辰"),
    ("chen4", "趁衬"),
    ("cheng1", "称撑"),
    ("cheng2", "成城程诚承乘橙呈惩"),
    ("cheng4", "秤"),
    ("chi1", "吃痴"),
    ("chi2", "迟持池驰匙"),
    ("chi3", "尺齿耻"),
    ("chi4", "赤翅斥"),
    ("chong1", "充冲"),
    ("chong2", "虫崇"),
    ("chou1", "抽"),
    ("chou2", "愁仇绸稠酬"),
    ("chou3", "丑"),
    ("chou4", "臭"),
    ("chu1", "出初"),
    ("chu2", "除厨橱锄雏"),
    ("chu3", "楚础储处"),
    ("chu4", "触畜"),
    ("chuan1", "穿川"),
    ("chuan2", "传船"),
    ("chuan4", "串"),
    ("chuang1", "窗疮"),
    ("chuang2", "床"),
    ("chuang4", "创"),
    ("chui1", "吹炊"),
    ("chui2", "垂锤捶"),
    ("chun1", "春"),
    ("chun2", "纯唇"),
    ("ci2", "词磁慈辞瓷"),
    ("ci3", "此"),
    ("ci4", "次刺赐"),
    ("cong1", "聪葱匆"),
    ("cong2", "从丛"),
    ("cu1", "粗"),
    ("cu4", "醋促"),
    ("cui1", "催摧"),
    ("cui4", "脆翠"),
    ("cun1", "村"),
    ("cun2", "存"),
    ("cun4", "寸"),
    ("cuo1", "搓"),
    ("cuo4", "错措挫"),
    ("da1", "搭"),
    ("da2", "答达"),
    ("da3", "打"),
    ("da4", "大"),
    ("dai1", "呆"),
    ("dai4", "带待戴代袋贷逮"),
    ("dan1", "单担耽"),
    ("dan3", "胆"),
    ("dan4", "但蛋淡弹诞氮"),
    ("dang1", "当"),
    ("dang3", "党挡"),
    ("dang4", "荡档"),
    ("dao1", "刀叨"),
    ("dao3", "导岛倒捣"),
    ("dao4", "到道稻盗悼"),
    ("de2", "得德"),
    ("de5", "的"),
    ("deng1", "灯登蹬"),
    ("deng3", "等"),
    ("deng4", "凳瞪"),
    ("di1", "低滴堤"),
    ("di2", "敌笛"),
    ("di3", "底抵"),
    ("di4", "地第弟帝递缔"),
    ("dian3", "点典"),
    ("dian4", "电店殿垫淀惦"),
    ("diao1", "雕叼"),
    ("diao4", "掉钓吊"),
    ("die1", "跌爹"),
    ("die2", "叠碟蝶"),
    ("ding1", "丁叮盯钉"),
    ("ding3", "顶鼎"),
    ("ding4", "定订"),
    ("diu1", "丢"),
    ("dong1", "东冬"),
    ("dong3", "懂董"),
    ("dong4", "动冻洞栋"),
    ("dou1", "都兜"),
    ("dou4", "豆斗逗痘"),
    ("du1", "督"),
    ("du2", "读独毒"),
    ("du3", "堵赌"),
    ("du4", "度渡肚杜妒"),
    ("duan1", "端"),
    ("duan3", "短"),
    ("duan4", "段断锻缎"),
    ("dui1", "堆"),
    ("dui4", "对队兑"),
    ("dun1", "吨蹲墩"),
    ("dun4", "顿盾钝"),
    ("duo1", "多哆"),
    ("duo2", "夺"),
    ("duo3", "朵躲"),
    ("duo4", "堕舵惰"),
    ("e2", "鹅额俄蛾"),
    ("e4", "饿恶鄂"),
    ("en1", "恩"),
    ("er2", "而儿"),
    ("er3", "耳尔"),
    ("er4", "二贰"),
    ("fa1", "发"),
    ("fa2", "罚乏伐阀"),
    ("fa3", "法"),
    ("fan1", "翻帆番"),
    ("fan2", "烦繁凡"),
    ("fan3", "反返"),
    ("fan4", "饭犯范泛贩"),
    ("fang1", "方芳坊"),
    ("fang2", "房防妨肪"),
    ("fang3", "访纺仿"),
    ("fang4", "放"),
    ("fei1", "飞非啡菲"),
    ("fei2", "肥"),
    ("fei4", "费废肺沸"),
    ("fen1", "分纷芬吩氛"),
    ("fen2", "坟"),
    ("fen3", "粉"),
    ("fen4", "份奋愤粪"),
    ("feng1", "风封丰峰蜂疯锋枫"),
    ("feng2", "缝逢"),
    ("feng4", "凤奉"),
    ("fo2", "佛"),
    ("fou3", "否"),
    ("fu1", "夫肤敷孵"),
    ("fu2", "服福扶浮符幅俘袱"),
    ("fu3", "府腐辅抚斧俯"),
    ("fu4", "父付妇负附富复副傅赴腹覆赋"),
    ("gai1", "该"),
    ("gai3", "改"),
    ("gai4", "盖概钙丐"),
    ("gan1", "干甘肝杆竿"),
    ("gan3", "感敢赶橄"),
    ("gang1", "刚钢纲缸"),
    ("gang3", "港岗"),
    ("gao1", "高糕膏"),
    ("gao3", "搞稿"),
    ("gao4", "告"),
    ("ge1", "歌哥胳鸽割搁"),
    ("ge2", "格革隔阁"),
    ("ge4", "个各"),
    ("gei3", "给"),
    ("gen1", "根跟"),
    ("geng1", "耕"),
    ("geng4", "更"),
    ("gong1", "工公功攻宫恭躬弓供"),
    ("gong4", "共贡"),
    ("gou1", "沟钩勾"),
    ("gou3", "狗苟"),
    ("gou4", "够购构"),
    ("gu1", "姑孤估辜菇"),
    ("gu3", "古谷股骨鼓"),
    ("gu4", "故顾固雇"),
    ("gua1", "瓜刮呱"),
    ("gua4", "挂卦"),
    ("guai1", "乖"),
    ("guai3", "拐"),
    ("guai4", "怪"),
    ("guan1", "关观官"),
    ("guan3", "管馆"),
    ("guan4", "惯罐灌贯冠"),
    ("guang1", "光"),
    ("guang3", "广"),
    ("gui1", "归规龟硅"),
    ("gui3", "鬼轨"),
    ("gui4", "贵柜桂跪"),
    ("gun3", "滚"),
    ("guo1", "锅"),
    ("guo2", "国"),
    ("guo3", "果裹"),
    ("guo4", "过"),
    ("ha1", "哈"),
    ("hai2", "还孩"),
    ("hai3", "海"),
    ("hai4", "害骇"),
    ("han2", "含寒韩函"),
    ("han3", "喊罕"),
    ("han4", "汉汗旱憾焊"),
    ("hang2", "航"),
    ("hao2", "豪毫嚎"),
    ("hao3", "好郝"),
    ("hao4", "号耗浩"),
    ("he1", "喝"),
    ("he2", "和河合盒何核荷禾"),
    ("he4", "贺赫"),
    ("hei1", "黑嘿"),
    ("hen3", "很狠"),
    ("hen4", "恨"),
    ("heng2", "横衡恒"),
    ("hong1", "轰烘"),
    ("hong2", "红洪宏虹"),
    ("hou2", "猴喉"),
    ("hou4", "后厚候"),
    ("hu1", "呼忽乎"),
    ("hu2", "湖胡壶糊蝴狐"),
    ("hu3", "虎"),
    ("hu4", "护互户"),
    ("hua1", "花"),
    ("hua2", "华滑划"),
    ("hua4", "话化画"),
    ("huai2", "怀淮"),
    ("huai4", "坏"),
    ("huan1", "欢"),
    ("huan2", "环"),
    ("huan3", "缓"),
    ("huan4", "换唤患幻焕"),
    ("huang1", "荒慌"),
    ("huang2", "黄皇煌蝗"),
    ("huang3", "谎晃"),
    ("hui1", "灰挥恢辉徽"),
    ("hui2", "回"),
    ("hui3", "悔毁"),
    ("hui4", "会汇惠绘贿"),
    ("hun1", "婚昏荤"),
    ("hun4", "混"),
    ("huo2", "活"),
    ("huo3", "火伙"),
    ("huo4", "或货获祸惑"),
    ("ji1", "机鸡基击积激饥肌姬讥"),
    ("ji2", "及级极急集即吉疾辑籍嫉"),
    ("ji3", "几己挤脊"),
    ("ji4", "记计纪技际济继寄寂祭绩季既剂忌迹"),
    ("jia1", "家加佳嘉夹"),
    ("jia3", "甲假"),
    ("jia4", "价架驾嫁稼"),
    ("jian1", "间尖坚肩艰兼监煎奸"),
    ("jian3", "简减检捡剪拣碱"),
    ("jian4", "见件建健剑渐箭荐键舰践鉴"),
    ("jiang1", "江将姜僵疆"),
    ("jiang3", "讲奖桨蒋"),
    ("jiang4", "降酱匠"),
    ("jiao1", "交浇骄郊胶椒焦蕉"),
    ("jiao3", "脚角饺搅缴"),
    ("jiao4", "叫教较轿"),
    ("jie1", "接街阶揭皆"),
    ("jie2", "节结洁杰捷截竭"),
    ("jie3", "姐解"),
    ("jie4", "借介界届戒诫"),
    ("jin1", "金今斤筋津巾"),
    ("jin3", "紧仅谨锦"),
    ("jin4", "进近尽禁劲浸晋"),
    ("jing1", "经京精惊晶睛鲸茎"),
    ("jing3", "井警景颈"),
    ("jing4", "静净境镜竟敬竞径"),
    ("jiu1", "究纠揪"),
    ("jiu3", "九久酒韭"),
    ("jiu4", "就旧救舅臼"),
    ("ju1", "居拘鞠"),
    ("ju2", "局橘菊"),
    ("ju3", "举沮"),
    ("ju4", "句具据距巨聚剧惧俱锯"),
    ("juan1", "捐娟鹃"),
    ("juan3", "卷"),
    ("jue2", "决觉绝掘爵"),
    ("jun1", "军均君菌"),
    ("jun4", "俊峻竣"),
    ("ka1", "咖喀"),
    ("ka3", "卡"),
    ("kai1", "开揩"),
    ("kan1", "刊勘"),
    ("kan3", "砍坎"),
    ("kan4", "看"),
    ("kang1", "康糠"),
    ("kang2", "扛"),
    ("kang4", "抗炕"),
    ("kao3", "考烤拷"),
    ("kao4", "靠"),
    ("ke1", "科颗棵磕蝌"),
    ("ke2", "壳咳"),
    ("ke3", "可渴"),
    ("ke4", "课客刻克"),
    ("ken3", "肯恳啃"),
    ("keng1", "坑"),
    ("kong1", "空"),
    ("kong3", "恐孔"),
    ("kong4", "控"),
    ("kou3", "口"),
    ("kou4", "扣寇"),
    ("ku1", "哭枯窟"),
    ("ku3", "苦"),
    ("ku4", "裤库酷"),
    ("kua1", "夸"),
    ("kua4", "跨挎"),
    ("kuai4", "快块筷"),
    ("kuan1", "宽"),
    ("kuan3", "款"),
    ("kuang1", "筐"),
    ("kuang2", "狂"),
    ("kuang4", "况矿框旷"),
    ("kui1", "亏盔窥"),
    ("kui4", "愧溃"),
    ("kun1", "昆"),
    ("kun4", "困"),
    ("kuo4", "阔扩括"),
    ("la1", "拉垃"),
    ("la4", "辣蜡腊"),
    ("la5", "啦"),
    ("lai2", "来"),
    ("lai4", "赖"),
    ("lan2", "蓝篮栏拦兰"),
    ("lan3", "懒览揽"),
    ("lan4", "烂滥"),
    ("lang2", "狼郎廊"),
    ("lang4", "浪"),
    ("lao1", "捞"),
    ("lao2", "劳牢唠"),
    ("lao3", "老姥"),
    ("lao4", "涝"),
    ("le4", "乐勒"),
    ("le5", "了"),
    ("lei2", "雷"),
    ("lei3", "垒"),
    ("lei4", "累类泪"),
    ("leng3", "冷"),
    ("leng4", "愣"),
    ("li2", "离梨黎璃篱犁"),
    ("li3", "里理李礼鲤"),
    ("li4", "力立利历例丽励厉粒莉隶吏"),
    ("lian2", "连联莲帘廉怜镰"),
    ("lian3", "脸"),
    ("lian4", "练炼恋链"),
    ("liang2", "良凉梁粮"),
    ("liang3", "两"),
    ("liang4", "量亮辆谅晾"),
    ("liao2", "聊疗辽"),
    ("liao4", "料廖"),
    ("lie4", "列烈裂猎劣"),
    ("lin2", "林淋临邻磷鳞"),
    ("lin4", "吝"),
    ("ling2", "零铃灵龄凌陵玲"),
    ("ling3", "领岭"),
    ("ling4", "另令"),
    ("liu1", "溜"),
    ("liu2", "流留刘榴瘤"),
    ("liu3", "柳"),
    ("liu4", "六"),
    ("long2", "龙隆聋笼"),
    ("lou2", "楼"),
    ("lou4", "漏陋"),
    ("lu2", "炉卢芦"),
    ("lu3", "鲁"),
    ("lu4", "路录陆鹿露碌"),
    ("lv2", "驴"),
    ("lv3", "旅吕铝屡履"),
    ("lv4", "绿律虑滤"),
    ("luan4", "乱"),
    ("lun2", "轮伦仑沦"),
    ("lun4", "论"),
    ("luo2", "罗萝锣螺逻"),
    ("luo4", "落络骆"),
    ("ma1", "妈"),
    ("ma2", "麻"),
    ("ma3", "马码蚂"),
    ("ma4", "骂"),
    ("ma5", "吗嘛"),
    ("mai2", "埋"),
    ("mai3", "买"),
    ("mai4", "卖麦迈脉"),
    ("man2", "馒瞒蛮"),
    ("man3", "满"),
    ("man4", "慢漫曼蔓"),
    ("mang2", "忙盲茫"),
    ("mao1", "猫"),
    ("mao2", "毛矛茅"),
    ("mao4", "帽冒貌茂贸"),
    ("me5", "么"),
    ("mei2", "没煤眉梅媒霉玫"),
    ("mei3", "美每"),
    ("mei4", "妹魅媚"),
    ("men2", "门"),
    ("men4", "闷"),
    ("men5", "们"),
    ("meng2", "萌盟蒙"),
    ("meng3", "猛"),
    ("meng4", "梦孟"),
    ("mi2", "迷谜弥"),
    ("mi3", "米"),
    ("mi4", "密蜜秘觅"),
    ("mian2", "棉眠绵"),
    ("mian3", "免勉缅"),
    ("mian4", "面"),
    ("miao2", "苗描瞄"),
    ("miao3", "秒渺"),
    ("miao4", "妙庙"),
    ("mie4", "灭蔑"),
    ("min2", "民"),
    ("min3", "敏悯闽"),
    ("ming2", "明名鸣铭"),
    ("ming4", "命"),
    ("mo1", "摸"),
    ("mo2", "磨模膜魔摩"),
    ("mo3", "抹"),
    ("mo4", "末墨默莫陌漠寞"),
    ("mou2", "谋牟"),
    ("mou3", "某"),
    ("mu3", "母亩姆拇"),
    ("mu4", "木目幕墓慕牧募睦"),
    ("na2", "拿"),
    ("na3", "哪"),
    ("na4", "那纳钠"),
    ("nai3", "奶乃"),
    ("nai4", "耐奈"),
    ("nan2", "南男难"),
    ("nao3", "脑恼"),
    ("nao4", "闹"),
    ("ne5", "呢"),
    ("nei4", "内"),
    ("nen4", "嫩"),
    ("neng2", "能"),
    ("ni2", "泥尼妮倪"),
    ("ni3", "你拟"),
    ("ni4", "逆腻匿"),
    ("nian2", "年粘"),
    ("nian3", "捻碾"),
    ("nian4", "念"),
    ("niang2", "娘"),
    ("niao3", "鸟"),
    ("nin2", "您"),
    ("ning2", "宁凝拧柠"),
    ("niu2", "牛"),
    ("niu3", "扭纽钮"),
    ("nong2", "农浓"),
    ("nong4", "弄"),
    ("nu2", "奴"),
    ("nu3", "努"),
    ("nu4", "怒"),
    ("nv3", "女"),
    ("nuan3", "暖"),
    ("nuo2", "挪"),
    ("nuo4", "诺糯"),
    ("ou1", "欧鸥殴"),
    ("ou3", "偶呕藕"),
    ("pa1", "趴"),
    ("pa2", "爬"),
    ("pa4", "怕帕"),
    ("pai1", "拍"),
    ("pai2", "排牌徘"),
    ("pai4", "派"),
    ("pan1", "攀潘"),
    ("pan2", "盘磐"),
    ("pan4", "判盼叛畔"),
    ("pang2", "旁庞螃"),
    ("pang4", "胖"),
    ("pao1", "抛"),
    ("pao2", "袍刨"),
    ("pao3", "跑"),
    ("pao4", "炮泡"),
    ("pei2", "陪培赔"),
    ("pei4", "配佩"),
    ("pen1", "喷"),
    ("pen2", "盆"),
    ("peng1", "烹砰"),
    ("peng2", "朋棚蓬膨彭"),
    ("peng3", "捧"),
    ("peng4", "碰"),
    ("pi1", "批披劈坯"),
    ("pi2", "皮疲脾啤"),
    ("pi3", "匹"),
    ("pi4", "屁辟僻"),
    ("pian1", "篇偏"),
    ("pian4", "片骗"),
    ("piao1", "飘"),
    ("piao4", "票漂"),
    ("pin1", "拼"),
    ("pin2", "贫频"),
    ("pin3", "品"),
    ("ping1", "乒"),
    ("ping2", "平瓶评苹凭屏"),
    ("po1", "坡泼颇"),
    ("po2", "婆"),
    ("po4", "破迫魄"),
    ("pu1", "扑铺"),
    ("pu2", "葡仆菩"),
    ("pu3", "普谱朴浦"),
    ("pu4", "瀑"),
    ("qi1", "七期妻戚漆欺凄"),
    ("qi2", "其奇骑旗棋齐歧祈"),
    ("qi3", "起企启岂乞"),
    ("qi4", "气汽器弃泣砌迄"),
    ("qia4", "恰洽"),
    ("qian1", "千签铅牵谦迁"),
    ("qian2", "前钱潜钳乾"),
    ("qian3", "浅遣"),
    ("qian4", "欠歉嵌"),
    ("qiang1", "枪腔"),
    ("qiang2", "强墙"),
    ("qiang3", "抢"),
    ("qiao1", "敲悄"),
    ("qiao2", "桥瞧侨乔"),
    ("qiao3", "巧"),
    ("qiao4", "翘俏窍"),
    ("qie1", "切"),
    ("qie3", "且"),
    ("qie4", "怯窃"),
    ("qin1", "亲侵钦"),
    ("qin2", "勤琴禽芹秦"),
    ("qing1", "清轻青倾蜻氢"),
    ("qing2", "情晴"),
    ("qing3", "请顷"),
    ("qing4", "庆"),
    ("qiong2", "穷"),
    ("qiu1", "秋丘蚯"),
    ("qiu2", "求球囚"),
    ("qu1", "区驱屈曲躯"),
    ("qu2", "渠"),
    ("qu3", "取娶"),
    ("qu4", "去趣"),
    ("quan1", "圈"),
    ("quan2", "全权泉拳痊"),
    ("quan4", "劝券"),
    ("que1", "缺"),
    ("que2", "瘸"),
    ("que4", "却确雀鹊"),
    ("qun2", "群裙"),
    ("ran2", "然燃"),
    ("ran3", "染"),
    ("rang3", "嚷"),
    ("rang4", "让"),
    ("rao2", "饶"),
    ("rao3", "扰"),
    ("rao4", "绕"),
    ("re3", "惹"),
    ("re4", "热"),
    ("ren2", "人仁"),
    ("ren3", "忍"),
    ("ren4", "认任韧刃"),
    ("reng1", "扔"),
    ("reng2", "仍"),
    ("ri4", "日"),
    ("rong2", "容荣融绒溶熔"),
    ("rou2", "柔揉"),
    ("rou4", "肉"),
    ("ru2", "如儒蠕"),
    ("ru3", "乳辱"),
    ("ru4", "入"),
    ("ruan3", "软"),
    ("rui4", "锐瑞"),
    ("run4", "润闰"),
    ("ruo4", "若弱"),
    ("sa1", "撒"),
    ("sa3", "洒"),
    ("sai1", "塞腮"),
    ("sai4", "赛"),
    ("san1", "三叁"),
    ("san3", "伞"),
    ("san4", "散"),
    ("sang1", "桑"),
    ("sang3", "嗓"),
    ("sang4", "丧"),
    ("sao1", "骚"),
    ("sao3", "扫嫂"),
    ("se4", "色涩瑟"),
    ("sen1", "森"),
    ("sha1", "杀沙纱砂"),
    ("sha3", "傻"),
    ("sha4", "厦"),
    ("shai1", "筛"),
    ("shai4", "晒"),
    ("shan1", "山衫删珊煽"),
    ("shan3", "闪陕"),
    ("shan4", "善扇擅膳"),
    ("shang1", "伤商"),
    ("shang3", "赏晌"),
    ("shang4", "上尚"),
    ("shao1", "烧稍捎梢"),
    ("shao2", "勺"),
    ("shao3", "少"),
    ("shao4", "绍哨"),
    ("she2", "蛇舌"),
    ("she3", "舍"),
    ("she4", "设社射摄涉赦"),
    ("shen1", "身深伸申呻绅"),
    ("shen2", "神什"),
    ("shen3", "审婶沈"),
    ("shen4", "甚肾慎渗"),
    ("sheng1", "生声升牲甥"),
    ("sheng2", "绳"),
    ("sheng3", "省"),
    ("sheng4", "胜圣盛剩"),
    ("shi1", "师诗失湿狮施尸"),
    ("shi2", "十时实识石食拾蚀"),
    ("shi3", "使始史驶屎矢"),
    ("shi4", "是事市式世视试室士示势释饰适逝誓氏侍柿"),
    ("shou1", "收"),
    ("shou3", "手首守"),
    ("shou4", "受售瘦授兽寿"),
    ("shu1", "书输舒叔殊蔬梳疏枢"),
    ("shu2", "熟赎"),
    ("shu3", "鼠属暑署薯蜀"),
    ("shu4", "树数束术述竖恕"),
    ("shua1", "刷"),
    ("shua3", "耍"),
    ("shuai1", "摔衰"),
    ("shuai3", "甩"),
    ("shuai4", "帅率"),
    ("shuan1", "拴栓"),
    ("shuang1", "双霜"),
    ("shuang3", "爽"),
    ("shei2", "谁"),
    ("shui3", "水"),
    ("shui4", "睡税"),
    ("shun4", "顺瞬"),
    ("shuo1", "说"),
    ("si1", "思私司丝斯撕嘶"),
    ("si3", "死"),
    ("si4", "四似寺饲肆"),
    ("song1", "松"),
    ("song4", "送宋诵颂"),
    ("sou1", "搜艘"),
    ("su1", "苏酥"),
    ("su2", "俗"),
    ("su4", "诉速素宿塑肃粟"),
    ("suan1", "酸"),
    ("suan4", "算蒜"),
    ("sui1", "虽"),
    ("sui2", "随隋"),
    ("sui4", "岁碎穗遂"),
    ("sun1", "孙"),
    ("sun3", "损笋"),
    ("suo1", "缩梭蓑"),
    ("suo3", "所索锁"),
    ("ta1", "他她它塌"),
    ("ta3", "塔"),
    ("ta4", "踏"),
    ("tai1", "胎"),
    ("tai2", "台抬苔"),
    ("tai4", "太态泰汰"),
    ("tan1", "贪摊瘫滩"),
    ("tan2", "谈痰潭坛"),
    ("tan3", "毯坦忐"),
    ("tan4", "探炭叹碳"),
    ("tang1", "汤"),
    ("tang2", "堂糖唐塘膛"),
    ("tang3", "躺倘"),
    ("tang4", "烫趟"),
    ("tao1", "掏涛滔"),
    ("tao2", "逃桃陶淘萄"),
    ("tao3", "讨"),
    ("tao4", "套"),
    ("te4", "特"),
    ("teng2", "疼腾藤"),
    ("ti1", "梯踢"),
    ("ti2", "题提啼蹄"),
    ("ti3", "体"),
    ("ti4", "替剃涕"),
    ("tian1", "天添"),
    ("tian2", "田甜填"),
    ("tian3", "舔"),
    ("tiao1", "挑"),
    ("tiao2", "条调"),
    ("tiao4", "跳眺"),
    ("tie1", "贴"),
    ("tie3", "铁"),
    ("ting1", "听厅"),
    ("ting2", "停庭亭廷"),
    ("ting3", "挺艇"),
    ("tong1", "通"),
    ("tong2", "同铜童桐瞳"),
    ("tong3", "统桶筒捅"),
    ("tong4", "痛"),
    ("tou1", "偷"),
    ("tou2", "头投"),
    ("tou4", "透"),
    ("tu1", "突秃凸"),
    ("tu2", "图途涂徒屠"),
    ("tu3", "土吐"),
    ("tu4", "兔"),
    ("tuan2", "团"),
    ("tui1", "推"),
    ("tui3", "腿"),
    ("tui4", "退"),
    ("tun1", "吞"),
    ("tuo1", "脱拖托"),
    ("tuo2", "驼驮鸵"),
    ("tuo3", "妥椭"),
    ("wa1", "挖蛙哇洼"),
    ("wa3", "瓦"),
    ("wa4", "袜"),
    ("wai1", "歪"),
    ("wai4", "外"),
    ("wan1", "弯湾豌"),
    ("wan2", "完玩丸顽"),
    ("wan3", "晚碗挽惋"),
    ("wan4", "万腕"),
    ("wang1", "汪"),
    ("wang2", "王亡"),
    ("wang3", "网往枉"),
    ("wang4", "忘望旺妄"),
    ("wei1", "危威微巍"),
    ("wei2", "为围维违唯惟"),
    ("wei3", "伟委尾伪纬"),
    ("wei4", "位味未喂卫胃谓慰魏畏"),
    ("wen1", "温瘟"),
    ("wen2", "文闻蚊纹"),
    ("wen3", "稳吻紊"),
    ("wen4", "问"),
    ("weng1", "翁"),
    ("wo1", "窝蜗"),
    ("wo3", "我"),
    ("wo4", "握卧沃"),
    ("wu1", "屋污乌呜巫诬"),
    ("wu2", "无吴梧"),
    ("wu3", "五午武舞伍侮捂鹉"),
    ("wu4", "物务误雾悟勿晤"),
    ("xi1", "西希吸息悉惜稀溪膝析晰熄牺昔夕"),
    ("xi2", "习席袭媳"),
    ("xi3", "洗喜"),
    ("xi4", "系细戏隙"),
    ("xia1", "虾瞎"),
    ("xia2", "狭霞峡侠"),
    ("xia4", "下夏吓"),
    ("xian1", "先鲜仙掀纤"),
    ("xian2", "闲咸嫌贤弦衔"),
    ("xian3", "显险"),
    ("xian4", "现线县限献宪陷馅羡腺"),
    ("xiang1", "相香乡箱厢镶"),
    ("xiang2", "详祥翔"),
    ("xiang3", "想响享"),
    ("xiang4", "向象像项巷橡"),
    ("xiao1", "消销萧宵削"),
    ("xiao3", "小晓"),
    ("xiao4", "笑效校孝肖"),
    ("xie1", "些歇蝎"),
    ("xie2", "鞋斜协邪携胁"),
    ("xie3", "写"),
    ("xie4", "谢泄卸屑械蟹"),
    ("xin1", "心新辛欣薪锌芯"),
    ("xin4", "信"),
    ("xing1", "星兴腥猩"),
    ("xing2", "行形型刑邢"),
    ("xing3", "醒"),
    ("xing4", "姓性幸杏"),
    ("xiong1", "兄胸凶汹"),
    ("xiong2", "雄熊"),
    ("xiu1", "修休羞"),
    ("xiu4", "秀绣袖锈嗅"),
    ("xu1", "需须虚吁"),
    ("xu2", "徐"),
    ("xu3", "许"),
    ("xu4", "续序绪蓄叙"),
    ("xuan1", "宣喧"),
    ("xuan2", "悬旋玄"),
    ("xuan3", "选"),
    ("xuan4", "炫绚"),
    ("xue2", "学穴"),
    ("xue3", "雪"),
    ("xue4", "血"),
    ("xun1", "熏勋"),
    ("xun2", "寻询巡循旬"),
    ("xun4", "训迅讯逊驯"),
    ("ya1", "压鸭押丫"),
    ("ya2", "牙芽崖涯"),
    ("ya3", "雅哑"),
    ("ya4", "亚"),
    ("ya5", "呀"),
    ("yan1", "烟淹咽腌"),
    ("yan2", "言严研沿盐颜炎岩延阎蜒"),
    ("yan3", "眼演掩衍"),
    ("yan4", "验厌宴艳燕雁焰"),
    ("yang1", "央秧殃"),
    ("yang2", "羊阳洋扬杨"),
    ("yang3", "养仰氧痒"),
    ("yang4", "样"),
    ("yao1", "腰邀妖夭"),
    ("yao2", "摇遥谣窑姚"),
    ("yao3", "咬"),
    ("yao4", "要药耀钥"),
    ("ye2", "爷耶"),
    ("ye3", "也野冶"),
    ("ye4", "业夜页叶液"),
    ("yi1", "一衣医依伊壹"),
    ("yi2", "疑姨移遗仪宜怡彝"),
    ("yi3", "以已椅倚乙蚁"),
    ("yi4", "意义议艺译易益亿忆异翼谊毅役疫逸溢"),
    ("yin1", "因音阴姻殷"),
    ("yin2", "银吟淫"),
    ("yin3", "引饮隐瘾"),
    ("yin4", "印"),
    ("ying1", "应英鹰婴樱鹦"),
    ("ying2", "赢迎营蝇盈荧"),
    ("ying3", "影"),
    ("ying4", "硬映"),
    ("yong1", "拥庸佣"),
    ("yong3", "永勇泳涌咏"),
    ("yong4", "用"),
    ("you1", "优忧悠幽"),
    ("you2", "由油游邮尤犹铀"),
    ("you3", "有友"),
    ("you4", "又右幼诱釉"),
    ("yu1", "迂淤"),
    ("yu2", "于鱼余愉渔娱愚舆逾榆"),
    ("yu3", "雨语与羽宇予屿"),
    ("yu4", "玉遇育欲狱浴预域御裕誉愈郁寓"),
    ("yuan1", "冤鸳渊"),
    ("yuan2", "元原员圆园源缘援袁猿"),
    ("yuan3", "远"),
    ("yuan4", "院愿怨苑"),
    ("yue1", "约"),
    ("yue4", "月越跃阅悦岳"),
    ("yun1", "晕"),
    ("yun2", "云匀"),
    ("yun3", "允"),
    ("yun4", "运韵孕酝"),
    ("za2", "杂砸"),
    ("zai1", "灾栽"),
    ("zai3", "宰"),
    ("zai4", "在再载"),
    ("zan2", "咱"),
    ("zan4", "赞暂"),
    ("zang1", "脏"),
    ("zang4", "葬"),
    ("zao1", "糟遭"),
    ("zao2", "凿"),
    ("zao3", "早澡枣蚤"),
    ("zao4", "造燥灶躁皂噪"),
    ("ze2", "则责择泽"),
    ("zei2", "贼"),
    ("zen3", "怎"),
    ("zeng1", "增"),
    ("zeng4", "赠"),
    ("zha1", "渣扎"),
    ("zha2", "闸"),
    ("zha4", "炸诈榨乍"),
    ("zhai1", "摘斋"),
    ("zhai2", "宅"),
    ("zhai3", "窄"),
    ("zhai4", "债寨"),
    ("zhan1", "沾瞻毡"),
    ("zhan3", "展斩崭盏"),
    ("zhan4", "站战占蘸"),
    ("zhang1", "张章彰樟"),
    ("zhang3", "涨掌"),
    ("zhang4", "丈帐账胀障仗杖"),
    ("zhao1", "招昭"),
    ("zhao3", "找"),
    ("zhao4", "照召兆罩赵"),
    ("zhe2", "折哲辙"),
    ("zhe3", "者"),
    ("zhe4", "这浙蔗"),
    ("zhe5", "着"),
    ("zhen1", "真针珍侦贞斟"),
    ("zhen3", "枕诊"),
    ("zhen4", "阵镇震振"),
    ("zheng1", "争征蒸睁筝"),
    ("zheng3", "整拯"),
    ("zheng4", "正政证挣症郑"),
    ("zhi1", "之知支枝芝织汁肢脂蜘"),
    ("zhi2", "直值职植执侄殖"),
    ("zhi3", "只纸指止址趾"),
    ("zhi4", "至制治质志致智置秩稚掷滞"),
    ("zhong1", "中钟终忠衷"),
    ("zhong3", "种肿"),
    ("zhong4", "重众仲"),
    ("zhou1", "周州洲舟粥"),
    ("zhou4", "皱宙骤昼"),
    ("zhu1", "猪珠株朱诸蛛"),
    ("zhu2", "竹逐烛"),
    ("zhu3", "主煮嘱瞩"),
    ("zhu4", "住注助祝著筑柱驻铸蛀"),
    ("zhua1", "抓"),
    ("zhuai4", "拽"),
    ("zhuan1", "专砖"),
    ("zhuan3", "转"),
    ("zhuan4", "赚"),
    ("zhuang1", "装庄妆桩"),
    ("zhuang4", "壮状撞幢"),
    ("zhui1", "追锥"),
    ("zhui4", "坠缀"),
    ("zhun3", "准"),
    ("zhuo1", "桌捉"),
    ("zhuo2", "卓浊啄"),
    ("zi1", "资姿滋咨兹"),
    ("zi3", "子仔紫籽"),
    ("zi4", "自字"),
    ("zong1", "宗综棕踪"),
    ("zong3", "总"),
    ("zong4", "纵粽"),
    ("zou3", "走"),
    ("zou4", "奏揍"),
    ("zu1", "租"),
    ("zu2", "足族"),
    ("zu3", "组阻祖"),
    ("zuan1", "钻"),
    ("zui3", "嘴"),
    ("zui4", "最醉罪"),
    ("zun1", "尊遵"),
    ("zuo2", "昨"),
    ("zuo3", "左"),
    ("zuo4", "做坐作座"),
]

# char -> comma-joined alternative readings, appended after the primary
SECONDARY: dict[str, str] = {
    "行": "hang2",
    "乐": "yue4",
    "了": "liao3",
    "觉": "jiao4",
    "重": "chong2",
    "发": "fa4",
    "都": "du1",
    "兴": "xing4",
    "角": "jue2",
    "调": "diao4",
    "切": "qie4",
    "相": "xiang4",
    "少": "shao4",
    "累": "lei3",
    "量": "liang2",
    "应": "ying4",
    "脏": "zang4",
    "假": "jia4",
    "更": "geng1",
    "传": "zhuan4",
    "会": "kuai4",
    "为": "wei4",
    "长": "zhang3",
    "教": "jiao1",
    "间": "jian4",
    "将": "jiang4",
    "降": "xiang2",
    "结": "jie1",
    "看": "kan1",
    "空": "kong4",
    "难": "nan4",
    "宁": "ning4",
    "漂": "piao1",
    "铺": "pu4",
    "曲": "qu3",
    "散": "san3",
    "丧": "sang1",
    "扫": "sao4",
    "厦": "xia4",
    "扇": "shan1",
    "舍": "she4",
    "什": "shi2",
    "盛": "cheng2",
    "数": "shu3",
    "似": "shi4",
    "踏": "ta1",
    "弹": "tan2",
    "挑": "tiao3",
    "吐": "tu4",
    "系": "ji4",
    "鲜": "xian3",
    "削": "xue1",
    "校": "jiao4",
    "省": "xing3",
    "旋": "xuan4",
    "要": "yao1",
    "咽": "yan4",
    "载": "zai3",
    "曾": "zeng1",
    "扎": "za1",
    "粘": "zhan1",
    "涨": "zhang4",
    "正": "zheng1",
    "挣": "zheng1",
    "只": "zhi1",
    "中": "zhong4",
    "种": "zhong4",
    "转": "zhuan4",
    "钻": "zuan4",
    "晕": "yun4",
    "好": "hao4",
    "干": "gan4",
    "供": "gong4",
    "冠": "guan1",
    "还": "huan2",
    "划": "hua4",
    "几": "ji1",
    "卷": "juan4",
    "磨": "mo4",
    "模": "mu2",
    "闷": "men1",
    "便": "pian2",
    "强": "qiang3",
    "悄": "qiao3",
    "率": "lv4",
    "塞": "sai4",
    "当": "dang4",
    "倒": "dao4",
    "钉": "ding4",
    "斗": "dou3",
    "缝": "feng4",
    "落": "la4",
    "露": "lou4",
    "尽": "jin3",
    "劲": "jing4",
    "处": "chu4",
    "藏": "zang4",
    "畜": "xu4",
    "折": "she2",
    "炸": "zha2",
    "颤": "zhan4",
    "得": "de5,dei3",
    "的": "di2",
    "地": "de5",
    "子": "zi5",
    "创": "chuang1",
    "答": "da1",
    "着": "zhao2,zhuo2",
}

# multi-character words read differently from the per-character primaries
OVERRIDES: list[tuple[str, str]] = [
    ("银行", "yin2,hang2"),
    ("行业", "hang2,ye4"),
    ("音乐", "yin1,yue4"),
    ("快乐", "kuai4,le4"),
    ("睡觉", "shui4,jiao4"),
    ("觉得", "jue2,de5"),
    ("了解", "liao3,jie3"),
    ("重复", "chong2,fu4"),
    ("重新", "chong2,xin1"),
    ("会计", "kuai4,ji4"),
    ("因为", "yin1,wei4"),
    ("为了", "wei4,le5"),
    ("头发", "tou2,fa4"),
    ("理发", "li3,fa4"),
    ("首都", "shou3,du1"),
    ("高兴", "gao1,xing4"),
    ("兴趣", "xing4,qu4"),
    ("角色", "jue2,se4"),
    ("调查", "diao4,cha2"),
    ("一切", "yi1,qie4"),
    ("照相", "zhao4,xiang4"),
    ("少年", "shao4,nian2"),
    ("积累", "ji1,lei3"),
    ("测量", "ce4,liang2"),
    ("反应", "fan3,ying4"),
    ("应用", "ying4,yong4"),
    ("心脏", "xin1,zang4"),
    ("放假", "fang4,jia4"),
    ("假期", "jia4,qi1"),
    ("更新", "geng1,xin1"),
    ("传记", "zhuan4,ji4"),
    ("自传", "zi4,zhuan4"),
    ("成长", "cheng2,zhang3"),
    ("长大", "zhang3,da4"),
    ("教书", "jiao1,shu1"),
    ("看守", "kan1,shou3"),
    ("还给", "huan2,gei3"),
    ("计划", "ji4,hua4"),
    ("挣扎", "zheng1,zha2"),
    ("正月", "zheng1,yue4"),
    ("一只", "yi1,zhi1"),
    ("便宜", "pian2,yi2"),
    ("要求", "yao1,qiu2"),
    ("弹琴", "tan2,qin2"),
    ("爱好", "ai4,hao4"),
    ("干活", "gan4,huo2"),
    ("中奖", "zhong4,jiang3"),
    ("种地", "zhong4,di4"),
    ("下载", "xia4,zai3"),
    ("记载", "ji4,zai3"),
]


def build_rows() -> list[str]:
    seen: dict[str, str] = {}
    for syllable, chars in GROUPS:
        for ch in chars:
            assert ch not in seen, f"{ch!r} in both {seen[ch]} and {syllable}"
            seen[ch] = syllable
    for ch in SECONDARY:
        assert ch in seen, f"secondary reading for unknown char {ch!r}"
    rows = []
    for syllable, chars in GROUPS:
        for ch in chars:
            readings = syllable
            if ch in SECONDARY:
                readings += "," + SECONDARY[ch]
            rows.append(f"{ch}\t{readings}")
    for word, readings in OVERRIDES:
        for ch in word:
            assert ch in seen, f"override {word!r} uses unknown char {ch!r}"
        assert len(readings.split(",")) == len(word), f"bad override {word!r}"
        rows.append(f"{word}\t{readings}")
    return rows


def main() -> None:
    out = Path(__file__).resolve().parent.parent / "src" / "pygec" / "data" / "pinyin_dict.tsv"
    rows = build_rows()
    header = [
        "# Simplified-character readings in tone-number form.",
        "# <char>\\t<primary[,alternatives...]> or <word>\\t<per-char readings>.",
        "# Regenerate with scripts/build_pinyin_data.py.",
    ]
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text("\n".join(header + rows) + "\n", encoding="utf-8")
    n_chars = sum(len(chars) for _, chars in GROUPS)
    print(f"wrote {out} ({n_chars} characters, {len(OVERRIDES)} word overrides)")


if __name__ == "__main__":
    main()
